//! Acceptance suite: one PASS/FAIL line per criterion.

use std::path::PathBuf;
use std::time::Instant;

use ncbtt::io::{load_algebra, AlgebraFile};
use ncbtt_core::algebra::Algebra;
use ncbtt_core::deform::*;
use ncbtt_core::exactla::{Scalar, SparseMatrix};
use ncbtt_core::hochschild::*;
use ncbtt_core::homology::{self, BvOutcome, Variant};
use ncbtt_core::trees::{self, RibbonTree};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20;
const CAP: usize = 1_000_000;
const CORPUS: [&str; 6] = ["point", "kxk", "m2", "cl1", "oddext", "dualnumbers"];

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("algebras").join(format!("{}.json", name))
}

fn load(name: &str) -> Algebra {
    load_algebra(&path(name), None).unwrap_or_else(|e| panic!("{}: {}", name, e))
}

fn corpus() -> Vec<Algebra> {
    CORPUS.iter().map(|n| load(n)).collect()
}

fn words(a: &Algebra, n: usize) -> Vec<Vec<usize>> {
    let bar = a.bar();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.iter().flat_map(|w| bar.iter().map(move |&b| [w.clone(), vec![b]].concat())).collect();
    }
    out
}

fn coeff(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from(rng.gen_range(-3i64..=3))
}

fn rand_cochain(a: &Algebra, n: usize, odd: bool, rng: &mut ChaCha8Rng) -> Cochain {
    let mut terms = Vec::new();
    for w in words(a, n) {
        for o in 0..a.dim() {
            let m = Mono::new(w.clone(), o);
            if m.parity(a) == odd && rng.gen_bool(0.7) {
                terms.push((m, coeff(rng)));
            }
        }
    }
    Cochain::from_terms(a, odd, terms).unwrap()
}

fn rand_chain(a: &Algebra, n: usize, odd: bool, rng: &mut ChaCha8Rng) -> Chain {
    let mut terms = Vec::new();
    for w in words(a, n) {
        for x0 in 0..a.dim() {
            let t = [vec![x0], w.clone()].concat();
            let p = t.iter().fold(false, |p, &i| p ^ a.sp(i));
            if p == odd && rng.gen_bool(0.7) {
                terms.push((t, coeff(rng)));
            }
        }
    }
    Chain::from_terms(a, odd, terms).unwrap()
}

fn rand_even(a: &Algebra, rng: &mut ChaCha8Rng, weights: &[usize]) -> Cochain {
    let mut c = Cochain::zero(a, false);
    for &w in weights {
        c = c.add(&rand_cochain(a, w, false, rng)).unwrap();
    }
    c
}

fn sign(odd: bool) -> Scalar {
    Scalar::sign(odd)
}

/// Input weight cap: five for the small algebras, three for M₂.
fn top(a: &Algebra) -> usize {
    if a.dim() > 2 {
        3
    } else {
        5
    }
}

fn c1_validation() -> Check {
    for a in corpus() {
        // Every corpus file describes a genuine cyclic A∞-algebra; the smooth
        // annotation is independent of validity.
        let r = a.validate(4);
        ensure(r.passed(), || format!("{} failed: {:?}", a.name(), r.checks.iter().find(|c| !c.passed)))?;
        ensure(a.smooth().is_some(), || format!("{} lacks a smooth annotation", a.name()))?;
    }
    // Negative controls: a broken pairing and a broken product must fail.
    let mut f = AlgebraFile::from_algebra(&load("dualnumbers"));
    f.pairing.push(("x".into(), "x".into(), "1".into()));
    let bad_pairing = f.build(None).map_err(|e| e.to_string())?;
    ensure(!bad_pairing.validate(4).passed(), || "non-cyclic pairing passed".into())?;
    let mut f = AlgebraFile::from_algebra(&load("kxk"));
    for p in f.products.iter_mut() {
        if p.inputs == ["e", "e"] {
            p.output = vec![("e".into(), "2".into())];
        }
    }
    let bad_product = f.build(None).map_err(|e| e.to_string())?;
    ensure(!bad_product.validate(4).passed(), || "non-associative product passed".into())?;
    Ok("6 corpus algebras valid to arity 4, 2 corrupted controls rejected".into())
}

fn c2_identities() -> Check {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    let mut count = 0usize;
    for a in corpus() {
        let name = a.name().to_string();
        let d = |u: &Cochain| hoch_diff(&a, u).unwrap();
        let dl = |u: &Cochain| delta(&a, u).unwrap();
        let br = |u: &Cochain, v: &Cochain| gerstenhaber(&a, u, v).unwrap();
        let b = |u: &Cochain, vs: &[&Cochain]| brace(&a, u, vs).unwrap();
        let pair = |u: &Cochain, c: &Chain| chain_cochain_pairing(&a, u, c).unwrap();
        for n in 0..=top(&a) {
            for odd in [false, true] {
                let f = rand_cochain(&a, n, odd, &mut r);
                ensure(d(&d(&f)).is_zero(), || format!("delta^2 on {} weight {}", name, n))?;
                ensure(dl(&dl(&f)).is_zero(), || format!("Delta^2 on {} weight {}", name, n))?;
                let c = rand_chain(&a, n, odd, &mut r);
                let bc = hoch_boundary(&a, &c).unwrap();
                ensure(hoch_boundary(&a, &bc).unwrap().is_zero(), || format!("b^2 on {} weight {}", name, n))?;
                let cc = connes_b(&a, &c).unwrap();
                ensure(connes_b(&a, &cc).unwrap().is_zero(), || format!("B^2 on {} weight {}", name, n))?;
                count += 4;
            }
        }
        for n in 0..top(&a) {
            for (p, q) in [(false, false), (false, true), (true, false), (true, true)] {
                let f = rand_cochain(&a, n, p, &mut r);
                let c = rand_chain(&a, n + 1, q, &mut r);
                let ok = pair(&d(&f), &c) == pair(&f, &hoch_boundary(&a, &c).unwrap()).signed(!p);
                ensure(ok, || format!("delta/b adjunction on {} weight {}", name, n))?;
                let g = rand_cochain(&a, n + 1, p, &mut r);
                let c0 = rand_chain(&a, n, q, &mut r);
                let ok = pair(&dl(&g), &c0) == pair(&g, &connes_b(&a, &c0).unwrap()).signed(!p);
                ensure(ok, || format!("Delta/B adjunction on {} weight {}", name, n))?;
                count += 2;
            }
        }
        let cap = if a.dim() > 2 { 1 } else { 2 };
        for (x, y, z) in [(0, 1, 1), (1, 1, 1), (1, 2, 0), (2, cap, 1), (cap, 2, 2)] {
            for bits in 0..8u8 {
                let f = rand_cochain(&a, x, bits & 1 == 1, &mut r);
                let g = rand_cochain(&a, y, bits & 2 == 2, &mut r);
                let h = rand_cochain(&a, z, bits & 4 == 4, &mut r);
                let (pf, pg, ph) = (f.is_odd(), g.is_odd(), h.is_odd());
                let lhs = br(&f, &br(&g, &h));
                let rhs = br(&br(&f, &g), &h).add_scaled(&sign(pf && pg), &br(&g, &br(&f, &h))).unwrap();
                ensure(lhs == rhs, || format!("Jacobi on {}", name))?;
                let lhs = d(&br(&f, &g));
                let rhs = br(&d(&f), &g).add_scaled(&sign(pf), &br(&f, &d(&g))).unwrap();
                ensure(lhs == rhs, || format!("derivation on {}", name))?;
                let lhs = b(&b(&f, &[&g]), &[&h]).sub(&b(&f, &[&b(&g, &[&h])])).unwrap();
                let rhs = b(&f, &[&g, &h]).add_scaled(&sign(pg && ph), &b(&f, &[&h, &g])).unwrap();
                ensure(lhs == rhs, || format!("pre-Jacobi on {}", name))?;
                count += 3;
            }
        }
        for (x, y) in [(0, 0), (0, 1), (1, 1), (1, 2), (2, 1)] {
            for bits in 0..4u8 {
                let f = rand_cochain(&a, x, bits & 1 == 1, &mut r);
                let g = rand_cochain(&a, y, bits & 2 == 2, &mut r);
                let (pf, pg) = (f.is_odd(), g.is_odd());
                let b1 = |u: &Cochain, v: &Cochain| b(u, &[v]);
                let lhs = d(&b1(&f, &g)).sub(&b1(&d(&f), &g)).unwrap().add_scaled(&sign(!pf), &b1(&f, &d(&g))).unwrap();
                let mfg = cup(&a, &f, &g).unwrap().scale(&sign(!pf ^ (!pg && x % 2 == 1)));
                let mgf = cup(&a, &g, &f).unwrap().scale(&sign(!pg ^ (!pf && y % 2 == 1)));
                let rhs = mfg.add_scaled(&sign(pf && pg), &mgf).unwrap().neg();
                ensure(lhs == rhs, || format!("homotopy commutativity on {}", name))?;
                count += 1;
            }
        }
    }
    Ok(format!("{} exact identity instances", count))
}

fn c3_bv() -> Check {
    let mut pairs = 0;
    for name in ["kxk", "m2", "cl1"] {
        let a = load(name);
        let w = 4;
        let mut reps = Vec::new();
        for r in homology::hh_all(&a, w).map_err(|e| e.to_string())? {
            reps.extend(r.representatives.into_iter().map(|c| (r.weight, c)));
        }
        ensure(!reps.is_empty(), || format!("{}: no classes", name))?;
        for (wa, x) in &reps {
            for (wb, y) in &reps {
                if wa + wb > w {
                    continue;
                }
                match homology::bv_defect(&a, x, y, w).map_err(|e| e.to_string())? {
                    BvOutcome::Primitive(_) => pairs += 1,
                    BvOutcome::Certificate { weight, .. } => {
                        return Err(format!("{}: defect not exact at weight {}", name, weight))
                    }
                }
            }
        }
    }
    Ok(format!("{} representative pairs, all primitive", pairs))
}

fn c4_ker_delta() -> Check {
    let mut count = 0;
    for a in corpus() {
        for n in 0..=5 {
            for variant in [Variant::Normalized, Variant::Strict] {
                let s = homology::cyclic_space(&a, n, variant).map_err(|e| e.to_string())?;
                for (i, (v, odd)) in s.basis.iter().enumerate() {
                    let c = s.index.to_cochain(v, *odd);
                    ensure(is_cyclic(&a, &c).unwrap(), || format!("{} weight {} vector {} not cyclic", a.name(), n, i))?;
                    ensure(delta(&a, &c).unwrap().is_zero(), || format!("Delta nonzero on {} weight {}", a.name(), n))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{} cyclic basis cochains in Ker Delta", count))
}

/// Dense rank modulo a prime, an oracle independent of the sparse
/// rational elimination.
fn dense_rank_mod(m: &SparseMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    let reduce = |s: &Scalar| -> u64 {
        let q = s.as_rational().expect("rational field");
        let n = q.numer().mod_floor(&pb).to_u64().unwrap();
        let d = q.denom().mod_floor(&pb).to_u64().unwrap();
        n * pow_mod(d, p - 2, p) % p
    };
    let mut rows = vec![vec![0u64; m.cols]; m.rows];
    for ((r, c), x) in &m.entries {
        rows[*r][*c] = reduce(x);
    }
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(piv) = (rank..m.rows).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for r in rank + 1..m.rows {
            let f = rows[r][col] * inv % p;
            if f == 0 {
                continue;
            }
            for c in col..m.cols {
                let sub = f * rows[rank][c] % p;
                rows[r][c] = (rows[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank over Q bounded below by ranks modulo two primes.
fn oracle_rank(m: &SparseMatrix) -> usize {
    dense_rank_mod(m, 1_000_003).max(dense_rank_mod(m, 999_983))
}

/// dim H at each total weight below `window`, from dense ranks.
fn oracle_dims(a: &Algebra, order: usize, window: usize) -> Vec<usize> {
    let mats: Vec<(usize, usize)> = (0..window)
        .map(|t| {
            let (m, par) = homology::u_matrix(a, order, t, Variant::Normalized).unwrap();
            (par.len(), oracle_rank(&m))
        })
        .collect();
    (0..window).map(|t| mats[t].0 - mats[t].1 - if t > 0 { mats[t - 1].1 } else { 0 }).collect()
}

fn c5_degeneration() -> Check {
    let mut out = Vec::new();
    for (name, want_pass, window) in
        [("point", true, 8), ("kxk", true, 8), ("m2", true, 5), ("cl1", true, 8), ("dualnumbers", false, 8)]
    {
        let a = load(name);
        let vs = homology::degeneration_check(&a, 3, window, Variant::Normalized).map_err(|e| e.to_string())?;
        let hh = oracle_dims(&a, 1, window);
        let mut any_fail = false;
        for v in &vs {
            let h = oracle_dims(&a, v.order, window);
            let e1: Vec<usize> =
                (0..window).map(|t| (0..v.order).filter(|p| 2 * p <= t).map(|p| hh[t - 2 * p]).sum()).collect();
            for (t, row) in v.rows.iter().enumerate() {
                ensure(row.h.0 + row.h.1 == h[t], || {
                    format!("{} M={} total {}: report dim H {} vs oracle {}", name, v.order, t, row.h.0 + row.h.1, h[t])
                })?;
            }
            let oracle_pass = h == e1;
            ensure(oracle_pass == v.pass, || format!("{} M={}: oracle verdict differs", name, v.order))?;
            any_fail |= !v.pass;
        }
        if want_pass {
            ensure(!any_fail, || format!("{} expected PASS", name))?;
        } else {
            let w = vs.iter().find(|v| !v.pass).ok_or_else(|| format!("{} expected FAIL", name))?;
            out.push(format!("{} FAIL at M={}", name, w.order));
        }
    }
    Ok(format!("k, kxk, M2, cl1 PASS for M<=3; {}; dense oracle agrees", out.join(", ")))
}

fn c6_iota() -> Check {
    for name in ["point", "kxk", "cl1"] {
        let a = load(name);
        let rows = homology::iota_comparison(&a, 3, 5).map_err(|e| e.to_string())?;
        ensure(rows.len() == 5, || format!("{}: {} rows", name, rows.len()))?;
        for r in &rows {
            ensure(r.u_complex.is_some() && r.agrees(), || {
                format!("{} weight {}: cyclic {} vs u-complex {:?}", name, r.weight, r.cyclic, r.u_complex)
            })?;
        }
    }
    Ok("strict tables agree at total weights 0..4".into())
}

fn c7_smoothness() -> Check {
    let mut probes = 0;
    for a in corpus() {
        let degenerates = homology::degeneration_check(&a, 2, 4, Variant::Normalized)
            .map_err(|e| e.to_string())?
            .iter()
            .all(|v| v.pass);
        if a.smooth() != Some(true) || !a.validate(4).passed() || !degenerates {
            continue;
        }
        let window = if a.dim() > 2 { 2 } else { 3 };
        for cyclic in [false, true] {
            let g = HochschildDgla::new(&a, window, cyclic).map_err(|e| e.to_string())?;
            let tangents = tangent_classes(&a, 2, cyclic).map_err(|e| e.to_string())?;
            for r in smoothness_probe(&g, &tangents, 5).map_err(|e| e.to_string())? {
                ensure(r.certificate.is_none(), || format!("{} obstructed (cyclic {})", a.name(), cyclic))?;
                ensure(r.window_incomplete.is_none() && r.certified_order == 5, || {
                    format!("{} stopped at order {}", a.name(), r.certified_order)
                })?;
                for res in mc_residual(&g, &r.deformation).map_err(|e| e.to_string())? {
                    ensure(res.is_zero(), || format!("{}: lift is not Maurer-Cartan", a.name()))?;
                }
                probes += 1;
            }
        }
    }
    let g = FiniteDgla::obstructed_fixture();
    let res = smoothness_probe(&g, &[g.basis(0)], 5).map_err(|e| e.to_string())?;
    let cert = res[0].certificate.as_ref().ok_or("fixture produced no certificate")?;
    ensure(cert.order == 2 && cert.verify(&g), || format!("fixture certificate at order {}", cert.order))?;
    Ok(format!("{} probes unobstructed to order 5; fixture certificate at order 2", probes))
}

fn c8_cyclic_lifting() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut lifts = 0;
    let check = |g: &HochschildDgla, gc: &HochschildDgla, a: &Algebra, x: &MCDeformation<Cochain>| -> Result<(), String> {
        match cyclicize(g, gc, x).map_err(|e| e.to_string())? {
            Cyclicized::Done { deformation, .. } => {
                for r in mc_residual(g, &deformation).map_err(|e| e.to_string())? {
                    ensure(r.is_zero(), || format!("{}: cyclic lift not Maurer-Cartan", a.name()))?;
                }
                for t in &deformation.terms {
                    ensure(is_cyclic(a, t).unwrap(), || format!("{}: lift not cyclic", a.name()))?;
                }
                Ok(())
            }
            Cyclicized::Infeasible { order, weight } => {
                Err(format!("{}: infeasible at order {} weight {}", a.name(), order, weight))
            }
        }
    };
    let a = load("dualnumbers");
    let g = HochschildDgla::new(&a, 3, false).map_err(|e| e.to_string())?;
    let gc = HochschildDgla::new(&a, 3, true).map_err(|e| e.to_string())?;
    let x = a.index_of("x").unwrap();
    let xx = Cochain::mono(&a, Mono::new(vec![x, x], a.unit()));
    let base = smoothness_probe(&g, &[xx], 5).map_err(|e| e.to_string())?.remove(0).deformation;
    check(&g, &gc, &a, &base)?;
    lifts += 1;
    for name in ["dualnumbers", "kxk", "cl1", "oddext"] {
        let a = load(name);
        let g = HochschildDgla::new(&a, 3, false).map_err(|e| e.to_string())?;
        let gc = HochschildDgla::new(&a, 3, true).map_err(|e| e.to_string())?;
        for t in tangent_classes(&a, 2, true).map_err(|e| e.to_string())? {
            let x = smoothness_probe(&gc, &[t], 4).map_err(|e| e.to_string())?.remove(0).deformation;
            for _ in 0..3 {
                let xi = vec![rand_even(&a, &mut rng, &[1]), rand_even(&a, &mut rng, &[0, 1]), rand_even(&a, &mut rng, &[1])];
                let y = gauge_apply(&g, &xi, &x).map_err(|e| e.to_string())?;
                check(&g, &gc, &a, &y)?;
                lifts += 1;
            }
        }
    }
    Ok(format!("x*x = t and {} gauge-perturbed deformations cyclicized", lifts - 1))
}

fn c9_trees() -> Check {
    let one = trees::enumerate(1, 1, CAP).map_err(|e| e.to_string())?;
    let deg1: Vec<&RibbonTree> = one.iter().filter(|t| t.degree() == 1).collect();
    ensure(deg1.len() == 1 && *deg1[0] == trees::delta_tree(), || format!("arity-1 degree-1 trees: {:?}", deg1))?;
    for k in 1..=4 {
        let ts = trees::enumerate(k, usize::MAX, CAP).map_err(|e| e.to_string())?;
        let max = ts.iter().map(|t| t.degree()).max().unwrap_or(0);
        ensure(max == 2 * k - 1, || format!("arity {} max degree {}", k, max))?;
        if k == 2 || k == 3 {
            let bad = ts.iter().find(|t| t.degree() == 2 * k - 1 && t.has_delta_tail().is_none());
            ensure(bad.is_none(), || format!("top-degree tree without a tailed leaf: {}", bad.unwrap()))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for a in corpus() {
        let name = a.name().to_string();
        for k in 1..=4 {
            let phi = rand_cochain(&a, k.min(top(&a)), rng.gen_bool(0.5), &mut rng);
            let xs: Vec<Cochain> = (0..4).map(|_| rand_cochain(&a, rng.gen_range(0..=1), rng.gen_bool(0.5), &mut rng)).collect();
            let mut args = vec![phi.clone()];
            args.extend(xs[..k].iter().cloned());
            let refs: Vec<&Cochain> = xs[..k].iter().collect();
            let got = trees::act(&a, &trees::brace_tree(k), &args).map_err(|e| e.to_string())?;
            ensure(got == brace(&a, &phi, &refs).unwrap(), || format!("{} W_{}", name, k))?;
            if k >= 2 {
                let mut c = args[0].clone();
                for y in &args[1..k] {
                    c = cup(&a, &c, y).unwrap();
                }
                let got = trees::act(&a, &trees::cup_tree(k), &args[..k]).map_err(|e| e.to_string())?;
                ensure(got == c, || format!("{} T_{}", name, k))?;
            }
        }
        let f = rand_cochain(&a, 2.min(top(&a)), rng.gen_bool(0.5), &mut rng);
        let got = trees::act(&a, &trees::delta_tree(), std::slice::from_ref(&f)).map_err(|e| e.to_string())?;
        ensure(got == delta(&a, &f).unwrap(), || format!("{} delta tree", name))?;
        let args: Vec<Cochain> = (0..2)
            .map(|i| cyclic_project(&a, &rand_cochain(&a, 1 + i % 2, i % 2 == 0, &mut rng)).unwrap())
            .collect();
        let r = trees::ker_delta_vanishing(&a, &args, CAP).map_err(|e| e.to_string())?;
        ensure(r.all_vanish(), || format!("{}: top-degree action nonzero on Ker Delta", name))?;
    }
    Ok("Delta tree unique, max degree 2k-1 for k<=4, tails present, actions agree, Ker Delta vanishing".into())
}

fn suite_json() -> Vec<String> {
    let seed = SEED.to_string();
    let mut runs = Vec::new();
    for name in CORPUS {
        let p = path(name).display().to_string();
        let cmds: Vec<Vec<&str>> = vec![
            vec!["validate", &p],
            vec!["hh", &p, "--max-weight", "4", "--representatives"],
            vec!["cyclic", &p, "--max-weight", "4", "--variant", "strict"],
            vec!["degen", &p, "--u-order", "3", "--max-weight", "5"],
            vec!["iota", &p, "--max-weight", "4"],
            vec!["bv-check", &p, "--max-weight", "3"],
            vec!["deform", &p, "--order", "3", "--max-weight", "2", "--cyclic"],
            vec!["trees", "verify", &p, "--arity", "2"],
        ];
        for c in cmds {
            let mut args = vec!["ncbtt", "--format", "json", "--seed", &seed];
            args.extend(c);
            let o = ncbtt::cli::run(args);
            runs.push(format!("{} {}\n{}{}", o.code, name, o.stdout, o.stderr));
        }
    }
    let o = ncbtt::cli::run(["ncbtt", "--format", "json", "trees", "enum", "--arity", "3"]);
    runs.push(o.stdout);
    runs
}

fn c10_determinism() -> Check {
    let (x, y) = (suite_json(), suite_json());
    ensure(x.iter().all(|s| s.contains('{')), || "a run produced no JSON".into())?;
    for (i, (p, q)) in x.iter().zip(&y).enumerate() {
        ensure(p == q, || format!("run {} differs", i))?;
    }
    Ok(format!("{} JSON reports byte-identical across two runs", x.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("hypothesis validation", c1_validation),
        ("operator identities", c2_identities),
        ("BV on cohomology", c3_bv),
        ("cyclic cochains lie in Ker Delta", c4_ker_delta),
        ("degeneration verdicts", c5_degeneration),
        ("iota comparison", c6_iota),
        ("smoothness evidence", c7_smoothness),
        ("cyclic lifting", c8_cyclic_lifting),
        ("tree suite", c9_trees),
        ("determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {:>2} {}: PASS ({}; {:.1}s)", i + 1, name, msg, secs),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {}: FAIL ({}; {:.1}s)", i + 1, name, msg, secs)
            }
        }
    }
    if failed > 0 {
        println!("{} of 10 criteria failed", failed);
        std::process::exit(1);
    }
    println!("all 10 criteria pass");
}
