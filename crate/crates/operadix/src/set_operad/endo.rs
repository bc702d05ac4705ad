use super::{SetOperad, SetOperadError};

/// A function `X^arity -> X` on the carrier `{0..size-1}`, tabulated.
/// The table is indexed by the mixed-radix encoding of the argument tuple
/// (first argument most significant).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndFn {
    pub arity: usize,
    pub table: Vec<usize>,
}

impl EndFn {
    pub fn constant(value: usize) -> EndFn {
        EndFn { arity: 0, table: vec![value] }
    }

    pub fn apply(&self, args: &[usize], size: usize) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let mut ix = 0;
        for &a in args {
            ix = ix * size + a;
        }
        self.table[ix]
    }
}

/// The endomorphism operad of a finite set of the given size.
#[derive(Debug, Clone, Copy)]
pub struct FiniteEndOperad {
    pub size: usize,
}

impl FiniteEndOperad {
    fn tuples(&self, len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * self.size);
            for t in &out {
                for v in 0..self.size {
                    let mut t2 = t.clone();
                    t2.push(v);
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }
}

impl SetOperad for FiniteEndOperad {
    type Elem = EndFn;

    fn identity(&self) -> EndFn {
        EndFn { arity: 1, table: (0..self.size).collect() }
    }

    fn arity(&self, e: &EndFn) -> usize {
        e.arity
    }

    fn compose(&self, a: &EndFn, i: usize, b: &EndFn) -> Result<EndFn, SetOperadError> {
        if a.arity == 0 {
            return Err(SetOperadError::NoSlots);
        }
        if i == 0 || i > a.arity {
            return Err(SetOperadError::SlotRange { slot: i, arity: a.arity });
        }
        let arity = a.arity + b.arity - 1;
        let mut table = Vec::with_capacity(self.size.pow(arity as u32));
        for args in self.tuples(arity) {
            let inner = b.apply(&args[i - 1..i - 1 + b.arity], self.size);
            let mut outer_args: Vec<usize> = args[..i - 1].to_vec();
            outer_args.push(inner);
            outer_args.extend_from_slice(&args[i - 1 + b.arity..]);
            table.push(a.apply(&outer_args, self.size));
        }
        Ok(EndFn { arity, table })
    }

    /// All functions `X^arity -> X`, truncated to `bound`, in table-lex
    /// order.  The full component has `size^(size^arity)` elements.
    fn elements(&self, arity: usize, bound: usize) -> Vec<EndFn> {
        let cells = self.size.pow(arity as u32);
        let mut out = Vec::new();
        let mut table = vec![0usize; cells];
        loop {
            out.push(EndFn { arity, table: table.clone() });
            if out.len() >= bound {
                break;
            }
            // increment the table as a base-`size` counter
            let mut pos = cells;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                table[pos] += 1;
                if table[pos] < self.size {
                    break;
                }
                table[pos] = 0;
            }
        }
        out
    }
}
