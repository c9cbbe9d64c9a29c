use criterion::{black_box, criterion_group, criterion_main, Criterion};

use planejac::{
    buchberger, family_polynomial, global_tjurina, local_length_oracle, local_tjurina, parse_poly, Ambient,
    FamilyParams, MonomialOrder, Point,
};
use planejac_bench::{affine, jacobian, long_expression};

fn groebner(c: &mut Criterion) {
    let order = MonomialOrder::grlex();
    for (a, b, cc) in [(9, 7, 3), (12, 8, 6)] {
        let gens = jacobian(&family_polynomial(FamilyParams::new(a, b, cc).unwrap()));
        c.bench_function(&format!("buchberger family ({a},{b},{cc})"), |bch| {
            bch.iter(|| buchberger(black_box(&gens), &order).unwrap())
        });
    }
}

fn local_lengths(c: &mut Criterion) {
    let o = Point::origin();
    for s in ["x*y*(x-y)*(x+y)^2+x^6+y^6", "x^10+y^10+x^3*y^8+x^7*y^5", "y^2-x^31"] {
        let f = affine(s);
        c.bench_function(&format!("local_tjurina {s}"), |b| b.iter(|| local_tjurina(black_box(&f), &o).unwrap()));
    }
    let gens = jacobian(&affine("x^5-y^5"));
    c.bench_function("macaulay oracle x^5-y^5 r=8", |b| b.iter(|| local_length_oracle(black_box(&gens), 8).unwrap()));
}

fn global(c: &mut Criterion) {
    let f = parse_poly("x0*x1*x2*(x0+x1+x2)*(x0-2*x1+3*x2)*(x0+5*x1-x2)", Ambient::Projective3).unwrap();
    c.bench_function("global_tjurina six lines", |b| b.iter(|| global_tjurina(black_box(&f)).unwrap()));
}

fn parsing(c: &mut Criterion) {
    let text = long_expression(400);
    c.bench_function("parse 400 terms", |b| b.iter(|| parse_poly(black_box(&text), Ambient::Affine2).unwrap()));
    c.bench_function("parse (x+y+1)^12", |b| b.iter(|| parse_poly(black_box("(x+y+1)^12"), Ambient::Affine2).unwrap()));
}

criterion_group!(benches, groebner, local_lengths, global, parsing);
criterion_main!(benches);
