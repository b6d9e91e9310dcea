//! Acceptance criteria, each reproduced in exact arithmetic.
//!
//! Prints one `PASS`/`FAIL` line per criterion followed by its sub-checks.
//! Sub-checks listed in `KNOWN_DIVERGENCES` are expected to fail: the
//! reference value disagrees with what the definitions produce. The test
//! asserts that every other sub-check passes and that each listed one still
//! fails, so a silent change in either direction is caught.

use std::fmt::Write as _;
use std::io::Write as _;
use std::time::{Duration, Instant};

use isotypic::algebra::{is_semisimple, jacobson_radical};
use isotypic::coeff::{rat, Coeff, Domain};
use isotypic::hopf::{
    certify_isotypic, character_projector, chevalley_check, dual, dual_regular_idempotent, haar_integral,
    hecke_algebra, hecke_theorem_check, hecke_unit, integral_space, quotient_hopf, regular_character_factor_check,
    verify_axioms, Character, HopfAlgebraData, IdempotentEntry, Side,
};
use isotypic::linalg::{flip, Subspace, Vector};
use isotypic::presentation::{
    build_double_cover, build_fk3, build_group_algebra_c2, build_group_algebra_s3, build_sweedler4, close_presentation,
    double_cover_dual, fk3_dual, fk3_index, fk3_system, Example, Fk3Lambdas, Perm3,
};

const KNOWN_DIVERGENCES: &[(u8, &str)] = &[
    (4, "Hecke algebra has dimension 2"),
    (5, "p̂_V equals the reference closed form"),
    (6, "p̂_V equals the reference closed form"),
];

struct Sub {
    name: String,
    passed: bool,
    detail: String,
}

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    subs: Vec<Sub>,
    elapsed: Duration,
}

impl Criterion {
    fn new(id: u8, title: &'static str, limit: Option<Duration>) -> Self {
        Criterion { id, title, limit, subs: Vec::new(), elapsed: Duration::ZERO }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.subs.push(Sub { name: name.into(), passed, detail: detail.into() });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let passed = got == want;
        let detail = if passed { String::new() } else { format!("got {got:?}, expected {want:?}") };
        self.check(name, passed, detail);
    }

    fn vec_eq(&mut self, h: &HopfAlgebraData, name: impl Into<String>, got: &Vector, want: &Vector) {
        let passed = got == want;
        let detail = if passed { h.format(got) } else { format!("got {}, expected {}", h.format(got), h.format(want)) };
        self.check(name, passed, detail);
    }

    fn finish(&mut self, start: Instant) {
        self.elapsed = start.elapsed();
        if let Some(limit) = self.limit {
            let ok = self.elapsed < limit;
            self.check(format!("runtime < {:?}", limit), ok, format!("{:.3?}", self.elapsed));
        }
    }

    fn expected_failure(&self, sub: &Sub) -> bool {
        KNOWN_DIVERGENCES.iter().any(|&(id, name)| id == self.id && name == sub.name)
    }

    fn render(&self, out: &mut String) {
        let passed = self.subs.iter().all(|s| s.passed);
        let verdict = if passed { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict} criterion {}: {} ({:.3?})", self.id, self.title, self.elapsed).unwrap();
        for s in &self.subs {
            let tag = match (s.passed, self.expected_failure(s)) {
                (true, _) => "ok  ",
                (false, true) => "KNOWN",
                (false, false) => "FAIL",
            };
            if s.detail.is_empty() {
                writeln!(out, "    {tag} {}", s.name).unwrap();
            } else {
                writeln!(out, "    {tag} {}: {}", s.name, s.detail).unwrap();
            }
        }
    }
}

fn q(n: i64, d: i64) -> Coeff {
    Coeff::from_ratio(n, d)
}

fn el(h: &HopfAlgebraData, terms: &[(Coeff, &str)]) -> Vector {
    let mut v = Vector::zeros(h.dim());
    for (c, label) in terms {
        let i = h.algebra().index_of(label).unwrap_or_else(|| panic!("no basis element {label}"));
        v[i] += c;
    }
    v
}

fn mul(h: &HopfAlgebraData, u: &Vector, v: &Vector) -> Vector {
    h.multiply(u, v).unwrap()
}

fn projectors(h: &HopfAlgebraData, chars: &[Character]) -> Vec<IdempotentEntry> {
    let p = dual_regular_idempotent(h);
    chars
        .iter()
        .map(|c| IdempotentEntry {
            name: c.name.clone(),
            idempotent: character_projector(h, &p, c).unwrap(),
            character: Some(c.clone()),
        })
        .collect()
}

fn axioms_pass(c: &mut Criterion, h: &HopfAlgebraData) {
    let failed: Vec<String> = verify_axioms(h).into_iter().filter(|r| !r.passed).map(|r| r.name).collect();
    c.check("verify_axioms passes", failed.is_empty(), failed.join(", "));
}

fn certified(c: &mut Criterion, h: &HopfAlgebraData, entries: &[IdempotentEntry]) {
    let q = quotient_hopf(h).ok();
    let r = certify_isotypic(h, entries, q.as_ref()).unwrap();
    let failed: Vec<String> = r
        .checks
        .iter()
        .filter(|x| !x.passed)
        .map(|x| format!("{} ({})", x.name, x.witness.clone().unwrap_or_default()))
        .collect();
    c.check("certified as an isotypic decomposition", r.certified, failed.join("; "));
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "Sweedler H4", Some(Duration::from_secs(1)));
    let start = Instant::now();
    let ex = build_sweedler4().unwrap();
    let h = &ex.hopf;
    let one = Coeff::one();
    let half = q(1, 2);
    axioms_pass(&mut c, h);
    let p = dual_regular_idempotent(h);
    c.vec_eq(h, "p = (1+g)/2", &p, &el(h, &[(half.clone(), "1"), (half.clone(), "g")]));
    let entries = projectors(h, &ex.characters);
    let minus = &entries[1].idempotent;
    c.vec_eq(h, "p̂_- = (1-g)/2", minus, &el(h, &[(half.clone(), "1"), (-&half, "g")]));
    c.check("p² = p", mul(h, &p, &p) == p, "");
    c.check("p̂_-² = p̂_-", &mul(h, minus, minus) == minus, "");
    c.check("p·p̂_- = p̂_-·p = 0", mul(h, &p, minus).is_zero() && mul(h, minus, &p).is_zero(), "");
    c.check("p + p̂_- = 1", &p.add(minus) == h.algebra().unit(), "");
    certified(&mut c, h, &entries);
    let left = integral_space(h, Side::Left).unwrap();
    let right = integral_space(h, Side::Right).unwrap();
    let x_1g = el(h, &[(one.clone(), "x"), (one.clone(), "gx")]);
    let x_1g_right = mul(h, &el(h, &[(one.clone(), "x")]), &el(h, &[(one.clone(), "1"), (one.clone(), "g")]));
    c.eq("left integrals = span{(1+g)x}", left, Subspace::span(4, &[x_1g]).unwrap());
    c.eq("right integrals = span{x(1+g)}", right, Subspace::span(4, &[x_1g_right]).unwrap());
    let j = jacobson_radical(h.algebra()).unwrap();
    c.eq("J = span{x, gx}", j, Subspace::span(4, &[el(h, &[(one.clone(), "x")]), el(h, &[(one, "gx")])]).unwrap());
    c.eq("p is not central", h.algebra().is_central(&p).unwrap(), false);
    c.eq("H4 is not semisimple", is_semisimple(h.algebra()).unwrap(), false);
    c.finish(start);
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "double cover H(0) over Q(i)", Some(Duration::from_secs(1)));
    let start = Instant::now();
    let ex = build_double_cover(&Coeff::zero(), &Domain::gaussian()).unwrap();
    let h = &ex.hopf;
    axioms_pass(&mut c, h);
    let i = Domain::gaussian().generator().unwrap();
    let quarter = q(1, 4);
    let form =
        |a: Coeff, b: Coeff, d: Coeff, e: Coeff| el(h, &[(a, "1"), (b, "g"), (d, "g^2"), (e, "g^3")]).scale(&quarter);
    let (one, neg) = (Coeff::one(), -&Coeff::one());
    let want = [
        ("¼(1+g+g²+g³)", form(one.clone(), one.clone(), one.clone(), one.clone())),
        ("¼(1-g+g²-g³)", form(one.clone(), neg.clone(), one.clone(), neg.clone())),
        ("¼(1+ig-g²-ig³)", form(one.clone(), i.clone(), neg.clone(), -&i)),
        ("¼(1-ig-g²+ig³)", form(one.clone(), -&i, neg.clone(), i.clone())),
    ];
    let entries = projectors(h, &ex.characters);
    c.eq("four characters attached", entries.len(), 4);
    for (e, (name, w)) in entries.iter().zip(&want) {
        c.vec_eq(h, format!("p̂_{} = {name}", e.name), &e.idempotent, w);
    }
    certified(&mut c, h, &entries);
    c.finish(start);
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "double cover H(2) counterexample", Some(Duration::from_secs(1)));
    let start = Instant::now();
    let ex = build_double_cover(&Coeff::from_i64(2), &Domain::Rational).unwrap();
    let h = &ex.hopf;
    axioms_pass(&mut c, h);
    c.eq("Chevalley property fails", chevalley_check(h).unwrap().holds(), false);
    let entries = projectors(h, &ex.characters);
    let v = entries.iter().find(|e| e.name == "V").expect("character V");
    let one_minus_g2 = el(h, &[(Coeff::one(), "1"), (-&Coeff::one(), "g^2")]);
    c.vec_eq(h, "p̂_V = 1 - g²", &v.idempotent, &one_minus_g2);
    c.vec_eq(h, "p̂_V² = 2(1 - g²)", &mul(h, &v.idempotent, &v.idempotent), &one_minus_g2.scale(&Coeff::from_i64(2)));
    let report = certify_isotypic(h, &entries, None).unwrap();
    c.eq("not certified", report.certified, false);
    let witness = report.checks.iter().find(|r| r.name == "p̂_V is idempotent").and_then(|r| r.witness.clone());
    c.eq("witness is p̂_V² − p̂_V = 1 − g²", witness, Some(format!("p̂_V² − p̂_V = {}", h.format(&one_minus_g2))));
    c.finish(start);
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "dual of H(2)", Some(Duration::from_secs(1)));
    let start = Instant::now();
    let cover = build_double_cover(&Coeff::from_i64(2), &Domain::Rational).unwrap();
    let ex = double_cover_dual(&cover);
    let h = &ex.hopf;
    axioms_pass(&mut c, h);
    let entries = projectors(h, &ex.characters);
    for (k, e) in entries.iter().enumerate() {
        c.vec_eq(h, format!("p̂_{} = {}", e.name, h.labels()[k]), &e.idempotent, &Vector::basis(8, k));
    }
    let lambda0 = hecke_unit(h).unwrap();
    let hstar = dual(h);
    let quarter = q(1, 4);
    let want = Vector::from_vec([vec![quarter; 4], vec![Coeff::zero(); 4]].concat());
    c.vec_eq(&hstar, "Λ₀ = ¼(1+g+g²+g³)", &lambda0, &want);
    let hk = hecke_algebra(&hstar, &lambda0).unwrap();
    c.eq("Hecke algebra has dimension 2", hk.algebra.dim(), 2);
    // Independent recomputation in H(2) itself: Λ₀xΛ₀ vanishes because
    // x anticommutes with g, so the claimed second basis vector is zero.
    let l0 = el(&cover.hopf, &[(q(1, 4), "1"), (q(1, 4), "g"), (q(1, 4), "g^2"), (q(1, 4), "g^3")]);
    let x = el(&cover.hopf, &[(Coeff::one(), "x")]);
    let sandwich = mul(&cover.hopf, &mul(&cover.hopf, &l0, &x), &l0);
    c.check("oracle: Λ₀xΛ₀ = 0 in H(2)", sandwich.is_zero(), cover.hopf.format(&sandwich));
    c.eq("Hecke algebra has a unique simple module", isotypic::algebra::has_unique_simple(&hk.algebra).unwrap(), true);
    let t = hecke_theorem_check(h, &ex.characters).unwrap();
    c.eq("(Σ p̂ᵢ = 1, unique simple)", (t.lhs, t.rhs), (true, true));
    c.finish(start);
    c
}

/// Reference FK3 values, as functions of `λab·λac`.
struct Fk3Closed {
    p: Vector,
    sgn: Vector,
    v: Vector,
}

fn fk3_closed(h: &HopfAlgebraData, lab_lac: &Coeff) -> Fk3Closed {
    let d = |w: &str, g: Perm3| format!("δ[{}]", h_label(w, g));
    let sixth = q(1, 6);
    let mut p = Vec::new();
    let mut sgn = Vec::new();
    for g in Perm3::ALL {
        p.push((Coeff::one(), d("1", g)));
        sgn.push((Coeff::from_i64(g.sign()), d("1", g)));
    }
    let abac23 = d("abac", Perm3::T23);
    let abac132 = d("abac", Perm3::C132);
    p.push((lab_lac.clone(), abac23.clone()));
    p.push((lab_lac.clone(), abac132.clone()));
    sgn.push((-lab_lac, abac23));
    sgn.push((lab_lac.clone(), abac132.clone()));
    let v = vec![
        (Coeff::from_i64(2), d("1", Perm3::IDENTITY)),
        (-&Coeff::one(), d("1", Perm3::C123)),
        (-&Coeff::one(), d("1", Perm3::C132)),
        (-lab_lac, abac132),
    ];
    let build = |terms: Vec<(Coeff, String)>| {
        let refs: Vec<(Coeff, &str)> = terms.iter().map(|(c, s)| (c.clone(), s.as_str())).collect();
        el(h, &refs).scale(&sixth)
    };
    Fk3Closed { p: build(p), sgn: build(sgn), v: build(v) }
}

/// Label of the declared basis element `word·e_g` of `H*`.
fn h_label(word: &str, g: Perm3) -> String {
    if word == "1" {
        format!("e{}", g.name())
    } else {
        format!("{word}·e{}", g.name())
    }
}

/// Checks shared by the numeric and symbolic FK3 criteria.
fn fk3_identities(c: &mut Criterion, star: &Example, lam: [Coeff; 3]) -> Vec<Vector> {
    let hs = &star.hopf;
    let h_ex = fk3_dual(star);
    let h = &h_ex.hopf;
    let [la, lb, lc] = lam;
    let (lab, lac) = (&la - &lb, &la - &lc);
    let lab_lac = &lab * &lac;
    axioms_pass(c, hs);
    c.eq("dim J(H) = 66", jacobson_radical(h.algebra()).unwrap().dim(), 66);

    let hq = quotient_hopf(h).unwrap();
    let qa = hq.hopf.algebra();
    let ks3 = build_group_algebra_s3().unwrap();
    // δ[e_g] ↦ g; the dual of the function algebra on S3 multiplies by composition.
    let to_group: Vec<usize> = qa
        .labels()
        .iter()
        .map(|l| Perm3::ALL.iter().position(|&g| *l == format!("δ[e{}]", g.name())).unwrap_or(usize::MAX))
        .collect();
    let table_ok = to_group.iter().all(|&g| g < 6)
        && (0..6).all(|i| {
            (0..6).all(|j| {
                let prod = qa.multiply(&Vector::basis(6, i), &Vector::basis(6, j)).unwrap();
                let gij = Perm3::ALL[to_group[i]].compose(Perm3::ALL[to_group[j]]).index();
                let k = to_group.iter().position(|&g| g == gij).unwrap();
                prod == Vector::basis(6, k)
            })
        });
    c.check("H/J multiplication = kS3 (δ[e_g] ↦ g)", table_ok, format!("labels {:?}", qa.labels()));
    c.eq("dim H/J = dim kS3", qa.dim(), ks3.hopf.dim());

    let chi = hs.algebra().regular_traces();
    let twelve = Coeff::from_i64(12);
    c.check("χ(e_g) = 12", Perm3::ALL.iter().all(|&g| chi[fk3_index("1", g).unwrap()] == twelve), "");
    let abac = |g: Perm3| chi[fk3_index("abac", g).unwrap()].clone();
    let big = &twelve * &lab_lac;
    c.eq("χ(abac·e23) = 12λabλac", abac(Perm3::T23), big.clone());
    c.eq("χ(abac·e132) = 12λabλac", abac(Perm3::C132), big);
    c.check(
        "other four abac traces vanish",
        [Perm3::IDENTITY, Perm3::T12, Perm3::T31, Perm3::C123].iter().all(|&g| abac(g).is_zero()),
        "",
    );

    let closed = fk3_closed(h, &lab_lac);
    let entries = projectors(h, &h_ex.characters);
    let (p, sgn, v) = (&entries[0].idempotent, &entries[1].idempotent, &entries[2].idempotent);
    c.vec_eq(h, "p equals the reference closed form", p, &closed.p);
    c.vec_eq(h, "p̂_sgn equals the reference closed form", sgn, &closed.sgn);
    c.vec_eq(h, "p̂_V equals the reference closed form", v, &closed.v);
    c.vec_eq(h, "p̂_V = dim(V) × reference closed form", v, &closed.v.scale(&Coeff::from_i64(2)));
    let names = ["p", "p̂_sgn", "p̂_V"];
    let elems = [p, sgn, v];
    for (a, x) in names.iter().zip(elems) {
        for (b, y) in names.iter().zip(elems) {
            let prod = mul(h, x, y);
            if a == b {
                c.check(format!("{a}² = {a}"), &prod == x, "");
            } else {
                c.check(format!("{a}·{b} = 0"), prod.is_zero(), h.format(&prod));
            }
        }
    }
    c.check("p + p̂_sgn + p̂_V = 1", &p.add(sgn).add(v) == h.algebra().unit(), "");
    certified(c, h, &entries);
    vec![p.clone(), sgn.clone(), v.clone()]
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "FK3 at λ = (0, 23, 11)", Some(Duration::from_secs(60)));
    let start = Instant::now();
    let lam = Fk3Lambdas::from_i64(0, 23, 11);
    let pa = close_presentation(fk3_system(&lam).unwrap()).unwrap();
    c.eq("closure dimension", pa.algebra().dim(), 72);
    c.eq("associativity certificate", pa.closure_certificate(), true);
    let star = build_fk3(&lam).unwrap();
    fk3_identities(&mut c, &star, [0, 23, 11].map(Coeff::from_i64));
    c.finish(start);
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "FK3 over Q[λa, λb, λc]", Some(Duration::from_secs(300)));
    let start = Instant::now();
    let lam = Fk3Lambdas::Symbolic;
    let pa = close_presentation(fk3_system(&lam).unwrap()).unwrap();
    c.eq("associativity certificate", pa.closure_certificate(), true);
    let star = build_fk3(&lam).unwrap();
    let hs = &star.hopf;
    let d = hs.algebra().domain().clone();
    let [la, lb, lc] = ["la", "lb", "lc"].map(|v| d.var(v).unwrap());
    let symbolic = fk3_identities(&mut c, &star, [la.clone(), lb.clone(), lc.clone()]);

    // (abac)² = abac((λab² + λca² − λbc²)e23 + 2λabλac·e132) − λab²λac²(e23 + e132)
    let (lab, lac, lbc, lca) = (&la - &lb, &la - &lc, &lb - &lc, &lc - &la);
    let abac: Vec<(Coeff, String)> = Perm3::ALL.iter().map(|&g| (Coeff::one(), h_label("abac", g))).collect();
    let abac = el(hs, &abac.iter().map(|(k, s)| (k.clone(), s.as_str())).collect::<Vec<_>>());
    let sq = &(&lab * &lab) * &(&lac * &lac);
    let want = el(
        hs,
        &[
            (&(&(&lab * &lab) + &(&lca * &lca)) - &(&lbc * &lbc), "abac·e23"),
            (&Coeff::from_i64(2) * &(&lab * &lac), "abac·e132"),
            (-&sq, "e23"),
            (-&sq, "e132"),
        ],
    );
    let got = mul(hs, &abac, &abac);
    c.vec_eq(hs, "(abac)² term for term", &got, &want);

    let points = [
        [rat(0, 1), rat(23, 1), rat(11, 1)],
        [rat(0, 1), rat(1, 1), rat(2, 1)],
        [rat(3, 1), rat(1, 1), rat(0, 1)],
        [rat(1, 2), rat(-3, 1), rat(5, 7)],
    ];
    for pt in points {
        let label = pt.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        let numeric = build_fk3(&Fk3Lambdas::Numeric(pt.clone())).unwrap();
        c.check(format!("H* at ({label}) equals the numeric build"), hs.eval(&pt).unwrap() == numeric.hopf, "");
        let num_dual = fk3_dual(&numeric);
        let num_entries = projectors(&num_dual.hopf, &num_dual.characters);
        let same = symbolic.iter().zip(&num_entries).all(|(s, n)| s.eval(&pt).unwrap() == n.idempotent);
        c.check(format!("p, p̂_sgn, p̂_V at ({label}) equal the numeric run"), same, "");
    }
    c.finish(start);
    c
}

fn builtins() -> Vec<(&'static str, Example)> {
    let cover2 = build_double_cover(&Coeff::from_i64(2), &Domain::Rational).unwrap();
    let star = build_fk3(&Fk3Lambdas::from_i64(0, 23, 11)).unwrap();
    vec![
        ("sweedler4", build_sweedler4().unwrap()),
        ("H(0)", build_double_cover(&Coeff::zero(), &Domain::gaussian()).unwrap()),
        ("H(2)*", double_cover_dual(&cover2)),
        ("H(2)", cover2),
        ("kC2", build_group_algebra_c2().unwrap()),
        ("kS3", build_group_algebra_s3().unwrap()),
        ("fk3", fk3_dual(&star)),
        ("fk3-star", star),
    ]
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "invariants across all built-ins", None);
    let start = Instant::now();
    for (tag, ex) in builtins() {
        let h = &ex.hopf;
        let bad: Vec<String> = verify_axioms(h).into_iter().filter(|r| !r.passed).map(|r| r.name).collect();
        c.check(format!("{tag}: axioms incl. antipode identities"), bad.is_empty(), bad.join(", "));
        let mut bad_chars = Vec::new();
        for chi in &ex.characters {
            bad_chars.extend(
                chi.validate(h).unwrap().into_iter().filter(|r| !r.passed).map(|r| r.witness.unwrap_or(r.name)),
            );
        }
        c.check(format!("{tag}: attached characters are algebra maps"), bad_chars.is_empty(), bad_chars.join("; "));
        let p = dual_regular_idempotent(h);
        let dp = h.comultiply(&p).unwrap();
        c.check(
            format!("{tag}: p² = p, ε(p) = 1, Δ(p) cocommutative"),
            mul(h, &p, &p) == p && h.apply_counit(&p).unwrap().is_one() && flip(&dp, h.dim()) == dp,
            "",
        );
        let dd = dual(&dual(h));
        let same = dd.algebra().mult() == h.algebra().mult()
            && dd.algebra().unit() == h.algebra().unit()
            && dd.comult() == h.comult()
            && dd.counit() == h.counit()
            && dd.antipode() == h.antipode();
        c.check(format!("{tag}: dual∘dual is the identity on tensors"), same, "");
        c.check(format!("{tag}: dual passes verify_axioms"), verify_axioms(&dual(h)).iter().all(|r| r.passed), "");
        let central = h.algebra().is_central(&p).unwrap();
        let semisimple = is_semisimple(h.algebra()).unwrap();
        c.check(format!("{tag}: p central ⇔ H semisimple"), central == semisimple, format!("{central}, {semisimple}"));
        if !chevalley_check(h).unwrap().holds() {
            c.check(format!("{tag}: not Chevalley, quotient checks skipped"), true, "");
            continue;
        }
        let hq = quotient_hopf(h).unwrap();
        let haar = haar_integral(&hq.hopf).unwrap();
        c.check(format!("{tag}: π(p) = Haar integral of H/J"), hq.project(&p).unwrap() == haar, hq.hopf.format(&haar));
        let f = regular_character_factor_check(h).unwrap();
        c.check(
            format!("{tag}: χ_H = (dim H / dim H/J)·χ_(H/J)∘π"),
            f.holds,
            f.witness.unwrap_or_else(|| format!("factor {}", f.factor)),
        );
        let one_dim: Vec<&Character> = ex.characters.iter().filter(|x| x.module_dim == 1).collect();
        let idem = one_dim.iter().all(|chi| {
            let e = character_projector(h, &p, chi).unwrap();
            mul(h, &e, &e) == e
        });
        c.check(
            format!("{tag}: one-dimensional projectors are idempotent"),
            idem,
            format!("{} characters", one_dim.len()),
        );
        let t = hecke_theorem_check(h, &ex.characters).unwrap();
        c.check(
            format!("{tag}: Σ p̂ᵢ = 1 ⇔ unique simple"),
            t.lhs == t.rhs,
            format!("({}, {}), Hecke dim {}", t.lhs, t.rhs, t.hecke_dim),
        );
    }
    c.finish(start);
    c
}

#[test]
fn acceptance() {
    let criteria =
        [criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(), criterion_6(), criterion_7()];
    let mut unexpected = Vec::new();
    let mut report = String::from("\n");
    for c in &criteria {
        c.render(&mut report);
        for s in &c.subs {
            if s.passed == c.expected_failure(s) {
                unexpected.push(format!(
                    "criterion {}: {} ({})",
                    c.id,
                    s.name,
                    if s.passed { "passed" } else { "failed" }
                ));
            }
        }
    }
    // Written to the real stdout so the summary shows up without --nocapture.
    std::io::stdout().lock().write_all(report.as_bytes()).unwrap();
    for &(id, name) in KNOWN_DIVERGENCES {
        let found = criteria.iter().any(|c| c.id == id && c.subs.iter().any(|s| s.name == name));
        assert!(found, "known divergence {id}/{name} was never evaluated");
    }
    assert!(unexpected.is_empty(), "unexpected outcomes:\n{}", unexpected.join("\n"));
}
