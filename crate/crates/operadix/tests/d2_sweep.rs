use operadix::dg::{d_generator, differential, GradedLabel};

#[test]
fn d_squared_zero_up_to_total_eight() {
    let mut count = 0;
    for n in 1..=7usize {
        for s in 1u64..(1 << n) {
            if n + s.count_ones() as usize > 8 {
                continue;
            }
            let lab = GradedLabel::Nu { n, s };
            let dd = differential(&d_generator(lab));
            assert!(dd.is_zero(), "d^2({lab}) = {dd}");
            count += 1;
        }
    }
    assert!(count == 79, "swept {count} generators");
    println!("swept {count} generators");
}
