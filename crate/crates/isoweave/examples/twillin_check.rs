fn main() {
    for n in [3usize, 4, 5, 6, 7] {
        let all = isoweave::enumerate_one_per_order(n);
        let nontwill: Vec<_> = all.iter().filter(|d| !d.is_twill()).collect();
        println!("order {n}: {} isonemal classes, {} non-twill", all.len(), nontwill.len());
        for d in &nontwill {
            println!("{}", d.to_text());
        }
    }
    let t = isoweave::twillin();
    println!("twillin:\n{}", t.to_text());
    let g = isoweave::enumerate_symmetries(&t).unwrap();
    println!("T basis: {:?} det {}", g.translation_basis(), g.translations().det());
    println!("flags: {:?}", g.flags());
    for a in g.axis_families() { println!("axis family {:?}", a); }
    for (s, lim) in [(1i8, 12i64), (-1, 12)] {
        for ax in g.concrete_axes(s, lim) { println!("axis {:?}", ax); }
    }
    for c in g.centre_families() { println!("centre {:?}", c); }
}
