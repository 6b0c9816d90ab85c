//! Acceptance battery: one PASS/FAIL line per criterion, each with a pinned time limit.
//!
//! Expected values come from closed forms or from brute-force oracles written
//! here, independent of the library's own enumeration code paths.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use squeezed::algebra::{self, StableOperator};
use squeezed::complex::{BallSphere, VdOptions};
use squeezed::homology::{self, HochsterOptions};
use squeezed::lefschetz::{self, Mode};
use squeezed::monomial::{collect_shifted_order_ideals, squarefree_extended_ideal, EnumerationConfig};
use squeezed::squeeze::{self, Decomposition};
use squeezed::verify::{self, VerifyConfig};
use squeezed::{Monomial, OrderIdeal, Rational, SimplicialComplex};

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn shifted(m_max: usize, d_max: usize) -> Vec<OrderIdeal> {
    (1..=m_max)
        .flat_map(|m| collect_shifted_order_ideals(EnumerationConfig::new(m, d_max)).unwrap())
        .collect()
}

fn sweep3() -> &'static [OrderIdeal] {
    static CELL: OnceLock<Vec<OrderIdeal>> = OnceLock::new();
    CELL.get_or_init(|| shifted(3, 3))
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn r(p: u64, q: u64) -> Rational {
    Rational::new(p, q)
}

// ----- brute-force oracles -----

/// Facet map written as one formula: pair blocks up to `min(s, t)`, singletons after, tail from `m+s+min(s,t)+1`.
fn oracle_facet(u: &Monomial, t: usize, m: usize, d: usize) -> Vec<usize> {
    let idx = u.indices();
    let s = idx.len();
    let mut out = BTreeSet::new();
    for (k, &i) in idx.iter().enumerate() {
        let l = k + 1;
        if l <= t {
            out.insert(i + 2 * l - 2);
            out.insert(i + 2 * l - 1);
        } else {
            out.insert(i + l + t - 1);
        }
    }
    out.extend(m + s + s.min(t) + 1..=m + t + d);
    out.into_iter().collect()
}

fn oracle_facets(u: &OrderIdeal, t: usize) -> BTreeSet<Vec<usize>> {
    u.iter().map(|w| oracle_facet(w, t, u.m(), u.d_max())).collect()
}

fn mask_of(face: &[usize]) -> u64 {
    face.iter().fold(0, |acc, &v| acc | 1 << (v - 1))
}

fn face_of(mask: u64, n: usize) -> Vec<usize> {
    (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect()
}

/// Ridge degrees by scanning every `(k-1)`-subset of `[n]`.
fn oracle_ridges(n: usize, facets: &BTreeSet<Vec<usize>>) -> BTreeMap<Vec<usize>, usize> {
    let k = facets.iter().next().unwrap().len();
    let masks: Vec<u64> = facets.iter().map(|f| mask_of(f)).collect();
    let mut out = BTreeMap::new();
    for s in 0u64..(1 << n) {
        if s.count_ones() as usize != k - 1 {
            continue;
        }
        let deg = masks.iter().filter(|&&f| f & s == s).count();
        if deg > 0 {
            out.insert(face_of(s, n), deg);
        }
    }
    out
}

fn oracle_excess(ridges: &BTreeMap<Vec<usize>, usize>) -> usize {
    ridges.values().map(|&d| d.saturating_sub(2)).sum()
}

fn oracle_d(n: usize, facets: &BTreeSet<Vec<usize>>) -> Rational {
    let ridges = oracle_ridges(n, facets);
    Rational::new(oracle_excess(&ridges) as u64, ridges.len() as u64)
}

fn oracle_d_of(u: &OrderIdeal, t: usize) -> Rational {
    oracle_d(u.m() + t + u.d_max(), &oracle_facets(u, t))
}

/// Every face of the complex generated by `facets`, as masks.
fn oracle_faces(facets: &BTreeSet<Vec<usize>>) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for f in facets {
        let m = mask_of(f);
        let mut sub = m;
        loop {
            out.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
    }
    out
}

fn oracle_h(facets: &BTreeSet<Vec<usize>>) -> Vec<i64> {
    let d = facets.iter().next().unwrap().len();
    let mut f = vec![0i64; d + 1];
    for s in oracle_faces(facets) {
        f[s.count_ones() as usize] += 1;
    }
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binom(d - i, k - i) as i64 * f[i]
                })
                .sum()
        })
        .collect()
}

/// Minimal non-members of `U`, as sorted index tuples.
fn oracle_ideal_generators(u: &OrderIdeal) -> BTreeSet<Vec<usize>> {
    let m = u.m();
    let mut out = BTreeSet::new();
    for w in u.iter() {
        for i in 1..=m {
            let v = w.times_var(i);
            if !u.contains(&v) && (1..=m).all(|j| v.exponent(j) == 0 || u.contains(&v.div_var(j).unwrap())) {
                out.insert(v.indices());
            }
        }
    }
    out
}

fn oracle_phi(t: usize, idx: &[usize]) -> Vec<usize> {
    idx.iter()
        .enumerate()
        .map(|(k, &i)| {
            let k = k + 1;
            i + if k <= t { 2 * (k - 1) } else { k + t - 1 }
        })
        .collect()
}

/// Minimal non-faces by scanning all subsets of `[n]`.
fn oracle_min_nonfaces(n: usize, facets: &BTreeSet<Vec<usize>>) -> BTreeSet<Vec<usize>> {
    let faces = oracle_faces(facets);
    (1u64..(1 << n))
        .filter(|s| !faces.contains(s))
        .filter(|s| (0..n).filter(|b| s >> b & 1 == 1).all(|b| faces.contains(&(s & !(1 << b)))))
        .map(|s| face_of(s, n))
        .collect()
}

fn antichain(sets: BTreeSet<Vec<usize>>) -> BTreeSet<Vec<usize>> {
    let contains = |a: &Vec<usize>, b: &Vec<usize>| b.iter().all(|x| a.contains(x));
    sets.iter().filter(|a| !sets.iter().any(|b| b != *a && contains(b, a))).cloned().collect()
}

/// Monomials of `P(n)` in degree `k` avoiding every generator (index tuples).
fn oracle_hilbert(gens: &BTreeSet<Vec<usize>>, n: usize, up_to: usize) -> Vec<u64> {
    let exps = |idx: &[usize]| {
        let mut e = vec![0u32; n];
        for &i in idx {
            e[i - 1] += 1;
        }
        e
    };
    let gen_exps: Vec<Vec<u32>> = gens.iter().map(|g| exps(g)).collect();
    let mut out = Vec::new();
    for k in 0..=up_to {
        let mut count = 0;
        let mut tuple = vec![1usize; k];
        loop {
            let e = exps(&tuple);
            if !gen_exps.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
                count += 1;
            }
            // next non-decreasing tuple
            let Some(pos) = (0..k).rev().find(|&p| tuple[p] < n) else { break };
            let v = tuple[pos] + 1;
            tuple[pos..].fill(v);
        }
        out.push(count);
    }
    out
}

fn oracle_ek(gens: &BTreeSet<Vec<usize>>) -> Vec<(usize, usize, u64)> {
    let mut table: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for g in gens {
        let top = *g.last().unwrap();
        for i in 0..top {
            *table.entry((g.len() + i, i)).or_default() += binom(top - 1, i);
        }
    }
    table.into_iter().filter(|&(_, b)| b > 0).map(|((j, i), b)| (i, j, b)).collect()
}

fn psi_maximal(u: &OrderIdeal, i: usize, j: usize) -> bool {
    let m = u.m();
    let src: Vec<&Monomial> = u.iter().filter(|w| w.degree() == i).collect();
    let dst = u.iter().filter(|w| w.degree() == i + j).count();
    let rank = src.iter().filter(|w| u.contains(&w.times_var_pow(m, j as u32))).count();
    rank == src.len().min(dst)
}

fn ideal(m: usize, members: &[&[usize]]) -> OrderIdeal {
    OrderIdeal::new(m, members.iter().map(|i| Monomial::from_indices(m, i))).unwrap()
}

/// Near-maximal ideal in two variables: every monomial of degree <= 3 except `x1^3`.
fn u_near_maximal() -> OrderIdeal {
    let members = OrderIdeal::maximal(2, 3).iter().filter(|w| w.indices() != [1, 1, 1]).cloned().collect::<Vec<_>>();
    OrderIdeal::new(2, members).unwrap()
}

// ----- criteria -----

fn c01_near_maximal_sequence() -> Check {
    let u = u_near_maximal();
    ensure!(u.len() == 9 && u.is_shifted(), "ideal setup");
    let profile = squeeze::sing_index_profile(&u).map_err(|e| e.to_string())?;
    let d: Vec<Rational> = profile.into_iter().map(Option::unwrap).collect();
    ensure!(d[1] == r(4, 19), "D(Δ_1) = {} (want 4/19)", d[1]);
    ensure!(d[2].is_zero() && d[3].is_zero(), "D(Δ_2), D(Δ_3) = {}, {}", d[2], d[3]);
    for t in [2, 3] {
        let delta = squeeze::build(&u, t).unwrap();
        ensure!(delta.is_pseudomanifold().unwrap(), "Δ_{t} not a pseudomanifold");
    }
    let oracle = oracle_d_of(&u, 0);
    ensure!(oracle == r(7, 10), "ridge oracle for Δ_0 gives {oracle} (excess 7 over 10 ridges expected)");
    ensure!(d[0] == oracle, "D(Δ_0) = {} but oracle {oracle}", d[0]);
    ensure!(d[0] > r(4, 19), "D(Δ_0) not above D(Δ_1)");
    for (t, value) in d.iter().enumerate() {
        ensure!(*value == oracle_d_of(&u, t), "oracle mismatch at t={t}");
    }
    Ok(())
}

fn c02_degree_two_closed_form() -> Check {
    for m in 2..=6 {
        let u = OrderIdeal::maximal(m, 2);
        let expected = r(binom(m + 1, 2) - 1, binom(m + 3, 2));
        let d1 = squeeze::build(&u, 1).unwrap().singularity_index().unwrap();
        ensure!(d1 == expected, "m={m}: D(Δ_1) = {d1}, closed form {expected}");
        let d0 = squeeze::build(&u, 0).unwrap().singularity_index().unwrap();
        ensure!(d0 == Rational::integer(m as i64 - 1), "m={m}: D(Δ_0) = {d0}");
        let d2 = squeeze::build(&u, 2).unwrap().singularity_index().unwrap();
        ensure!(d2.is_zero(), "m={m}: D(Δ_2) = {d2}");
        ensure!(d1 == oracle_d_of(&u, 1), "m={m}: oracle disagrees at t=1");
    }
    Ok(())
}

fn c03_degree_three_closed_forms() -> Check {
    for m in 2..=5 {
        let u = OrderIdeal::maximal(m, 3);
        let e1 = r(2 * binom(m + 2, 3) + binom(m, 2) - 2, binom(m + 4, 3));
        let e2 = r(binom(m + 2, 3) - 1, binom(m + 4, 3) + binom(m + 3, 3));
        let d1 = squeeze::build(&u, 1).unwrap().singularity_index().unwrap();
        let d2 = squeeze::build(&u, 2).unwrap().singularity_index().unwrap();
        ensure!(d1 == e1, "m={m}: D(Δ_1) = {d1}, closed form {e1}");
        ensure!(d2 == e2, "m={m}: D(Δ_2) = {d2}, closed form {e2}");
    }
    Ok(())
}

fn c04_maximal_classification() -> Check {
    for m in [2, 3] {
        for d in [2, 3] {
            let u = OrderIdeal::maximal(m, d);
            for t in 0..=d {
                let delta = squeeze::build(&u, t).unwrap();
                if t < d {
                    let ridge: Vec<usize> = (1..=d + t - 1).collect();
                    let oracle = oracle_ridges(delta.n(), &oracle_facets(&u, t));
                    let deg = delta.ridge_degree_map().unwrap().degree(&ridge);
                    ensure!(deg == Some(m + 1), "m={m} d={d} t={t}: ridge degree {deg:?}");
                    ensure!(oracle.get(&ridge) == Some(&(m + 1)), "oracle ridge degree differs");
                    ensure!(!delta.is_pseudomanifold().unwrap(), "m={m} d={d} t={t}: pseudomanifold");
                } else {
                    let verdict = delta.classify_ball_sphere(1_000_000).unwrap();
                    ensure!(verdict.verdict == BallSphere::Ball, "m={m} d={d} t={t}: {:?}", verdict.verdict);
                    ensure!(verdict.homology_agrees == Some(true), "homology inconsistent");
                }
            }
        }
    }
    Ok(())
}

fn c05_stanley_reisner_sweep() -> Check {
    let mut count = 0;
    for u in sweep3() {
        let gens = oracle_ideal_generators(u);
        for t in 0..=u.d_max() {
            let delta = squeeze::build(u, t).unwrap();
            let n = delta.n();
            let library_phi: BTreeSet<Vec<usize>> = algebra::apply_operator_to_ideal(&StableOperator::Phi(t), &u.ideal())
                .generators()
                .iter()
                .map(Monomial::indices)
                .collect();
            let oracle_phi_set = antichain(gens.iter().map(|g| oracle_phi(t, g)).collect());
            let sr: BTreeSet<Vec<usize>> =
                algebra::stanley_reisner_ideal(&delta).generators().iter().map(Monomial::indices).collect();
            let brute = oracle_min_nonfaces(n, &oracle_facets(u, t));
            ensure!(library_phi == oracle_phi_set, "φ_t images differ for {u:?}, t={t}");
            ensure!(sr == brute, "minimal non-faces differ for {u:?}, t={t}");
            ensure!(library_phi == sr, "φ_t(I(U)) ≠ I_Δ for {u:?}, t={t}");
            count += 1;
        }
    }
    ensure!(count > 0, "empty sweep");
    Ok(())
}

fn c06_shedding_sweep() -> Check {
    for u in sweep3() {
        let (m, d) = (u.m(), u.d_max());
        let quotient = u.first_variable_quotient();
        let rest = u.without_first_variable();
        for t in 0..=d {
            let delta = squeeze::build(u, t).unwrap();
            let facets = oracle_facets(u, t);
            let oracle_link: BTreeSet<Vec<usize>> = facets
                .iter()
                .filter(|f| f.contains(&1))
                .map(|f| f.iter().copied().filter(|&v| v != 1).collect())
                .collect();
            let predicted_link: BTreeSet<Vec<usize>> = quotient
                .iter()
                .map(|w| {
                    if t >= 1 {
                        let mut f = vec![2];
                        f.extend(oracle_facet(w, t - 1, m, d - 1).into_iter().map(|v| v + 2));
                        f
                    } else {
                        oracle_facet(w, 0, m, d - 1).into_iter().map(|v| v + 1).collect()
                    }
                })
                .collect();
            let library_link: BTreeSet<Vec<usize>> = delta.link(&[1]).unwrap().facets().iter().cloned().collect();
            ensure!(oracle_link == predicted_link, "link law fails for {u:?}, t={t}");
            ensure!(library_link == oracle_link, "library link differs for {u:?}, t={t}");

            let stripped: BTreeSet<Vec<usize>> =
                facets.iter().map(|f| f.iter().copied().filter(|&v| v != 1).collect()).collect();
            let oracle_deletion = antichain(stripped);
            let predicted_deletion: BTreeSet<Vec<usize>> = rest.iter().map(|w| oracle_facet(w, t, m, d)).collect();
            let library_deletion: BTreeSet<Vec<usize>> = delta.delete_vertex(1).facets().iter().cloned().collect();
            ensure!(oracle_deletion == predicted_deletion, "deletion law fails for {u:?}, t={t}");
            ensure!(library_deletion == oracle_deletion, "library deletion differs for {u:?}, t={t}");
            ensure!(
                oracle_deletion.iter().all(|f| f.len() == d + t),
                "deletion of 1 not pure of full dimension for {u:?}, t={t}"
            );

            let out = delta.vertex_decomposable(&VdOptions::strict().with_hint(1)).map_err(|e| e.to_string())?;
            ensure!(out.decomposable, "not vertex decomposable: {u:?}, t={t}");
            ensure!(out.shedding.first() == Some(&1), "first shedding vertex {:?}", out.shedding.first());
            ensure!(out.h_recursion_ok, "h recursion broken for {u:?}, t={t}");
            let link = delta.link(&[1]).unwrap();
            ensure!(link.vertex_decomposable(&VdOptions::strict()).unwrap().decomposable, "link of 1 not decomposable");
        }
    }
    Ok(())
}

fn c07_h_vector_sweep() -> Check {
    for u in sweep3() {
        for t in 0..=u.d_max() {
            let expected = oracle_h(&oracle_facets(u, t));
            let law: Vec<i64> = squeeze::squeezed_h_vector(u, t).unwrap().into_iter().map(|x| x as i64).collect();
            let generic = squeeze::build(u, t).unwrap().h_vector().unwrap();
            ensure!(law == expected, "histogram {law:?} vs oracle {expected:?} for {u:?}, t={t}");
            ensure!(generic == expected, "h_vector {generic:?} vs oracle {expected:?}");
        }
    }
    Ok(())
}

fn c08_betti_and_hilbert() -> Check {
    for u in shifted(3, 2) {
        let gens = oracle_ideal_generators(&u);
        let ek_oracle = oracle_ek(&gens);
        let ek = algebra::ek_betti(&u.ideal()).unwrap().nonzero();
        ensure!(ek == ek_oracle, "EK table {ek:?} vs oracle {ek_oracle:?}");
        for t in 0..=u.d_max() {
            let delta = squeeze::build(&u, t).unwrap();
            let n = delta.n();
            let up_to = u.d_max() + 2;
            let hochster = homology::hochster_betti(&delta, HochsterOptions::default()).unwrap().nonzero();
            ensure!(hochster == ek_oracle, "Hochster {hochster:?} vs EK {ek_oracle:?} for {u:?}, t={t}");
            let phi: BTreeSet<Vec<usize>> = gens.iter().map(|g| oracle_phi(t, g)).collect();
            let h_squarefree = oracle_hilbert(&phi, n, up_to);
            let h_extended = oracle_hilbert(&gens, n, up_to);
            ensure!(h_squarefree == h_extended, "Hilbert functions differ for {u:?}, t={t}");
            let report = algebra::verify_gin_claim(&u, t, HochsterOptions::default()).unwrap();
            ensure!(report.passed(), "library gin check fails for {u:?}, t={t}");
            ensure!(report.hilbert_extended == h_extended, "library Hilbert function differs from oracle");
        }
    }
    Ok(())
}

fn c09_lefschetz() -> Check {
    let u_prime = ideal(3, &[&[], &[3], &[2], &[1], &[3, 3], &[2, 3], &[2, 2]]);
    let u_slp = ideal(3, &[&[], &[3], &[2], &[1], &[3, 3], &[2, 3], &[1, 3]]);
    ensure!(!lefschetz::has_wlp(&u_prime, Mode::Criterion).unwrap().holds, "U' should fail the WLP");
    ensure!(lefschetz::has_slp(&u_slp, Mode::Criterion).unwrap().holds, "U should have the SLP");
    let mut checked = 0;
    for u in shifted(3, 4) {
        let d = u.d_max();
        let wlp_oracle = (1..=d).all(|j| psi_maximal(&u, j - 1, 1));
        let slp_oracle = (0..=d).all(|j| (0..j).all(|i| psi_maximal(&u, i, j - i)));
        let wlp = lefschetz::has_wlp(&u, Mode::Criterion).unwrap().holds;
        let slp = lefschetz::has_slp(&u, Mode::Criterion).unwrap().holds;
        ensure!(wlp == wlp_oracle, "WLP criterion {wlp} vs oracle {wlp_oracle} for {u:?}");
        ensure!(slp == slp_oracle, "SLP criterion {slp} vs oracle {slp_oracle} for {u:?}");
        ensure!(lefschetz::has_wlp(&u, Mode::Both).is_ok() && lefschetz::has_slp(&u, Mode::Both).is_ok(), "modes disagree");
        checked += 1;
    }
    ensure!(checked > 0, "empty sweep");
    Ok(())
}

fn c10_monotonicity() -> Check {
    for u in sweep3() {
        let d = u.d_max();
        let profile = squeeze::sing_index_profile(u).unwrap();
        let defined: Vec<Rational> = profile.iter().flatten().cloned().collect();
        ensure!(verify::is_strictly_decreasing_to_zero(&defined), "profile {profile:?} for {u:?}");
        for (t, value) in profile.iter().enumerate() {
            if let Some(value) = value {
                ensure!(*value == oracle_d_of(u, t), "oracle mismatch for {u:?}, t={t}");
            }
        }
        let excess: Vec<usize> = (0..=d)
            .map(|t| oracle_excess(&oracle_ridges(u.m() + t + d, &oracle_facets(u, t))))
            .collect();
        ensure!(excess.windows(2).all(|w| w[0] >= w[1]), "excess {excess:?} increases for {u:?}");
    }
    Ok(())
}

fn c11_common_divisor_ball() -> Check {
    let mut hits = 0;
    for u in sweep3() {
        let (m, d) = (u.m(), u.d_max());
        // d = 1 would force m = 1, where Δ_0 is a pair of points
        if d < 2 || !u.layer(d).iter().all(|w| w.exponent(m) > 0) {
            continue;
        }
        let delta = squeeze::build(u, d - 1).unwrap();
        let verdict = delta.classify_ball_sphere(1_000_000).unwrap().verdict;
        ensure!(verdict == BallSphere::Ball, "{u:?}: Δ_(d-1) classified {verdict:?}");
        ensure!(oracle_d_of(u, d - 1).is_zero(), "{u:?}: D ≠ 0");
        hits += 1;
    }
    ensure!(hits > 0, "no ideal met the hypothesis");
    Ok(())
}

fn c12_duality() -> Check {
    let config = VerifyConfig { random_ideals: 200, seed: 12, ..Default::default() };
    let random = verify::random_order_ideals(&config);
    for u in sweep3().iter().chain(random.iter()) {
        let gens = oracle_ideal_generators(u);
        let ideal = u.ideal();
        let library: BTreeSet<Vec<usize>> = ideal.generators().iter().map(Monomial::indices).collect();
        ensure!(library == gens, "ideal generators differ for {u:?}");
        ensure!(&ideal.complement().unwrap() == u, "round trip fails for {u:?}");
        ensure!(ideal.is_strongly_stable() == u.is_shifted(), "stability/shiftedness mismatch for {u:?}");
        let dmax = gens.iter().map(Vec::len).max().unwrap();
        ensure!(2 <= dmax && dmax <= u.d_max() + 1, "degree bound fails for {u:?}");
        if u.is_shifted() {
            ensure!(dmax == u.d_max() + 1, "d_max(I(U)) = {dmax} for shifted {u:?}");
        }
    }
    ensure!(random.iter().any(|u| !u.is_shifted()), "random family has no unshifted member");
    for m in 1..=4 {
        for l in 1..=m {
            let u = squarefree_extended_ideal(m, l);
            let dmax = oracle_ideal_generators(&u).iter().map(Vec::len).max().unwrap();
            ensure!(dmax == l + 1, "m={m}, level {l}: d_max(I) = {dmax}");
            ensure!(u.ideal().d_max() == l + 1, "library d_max differs");
            ensure!(u.d_max() == m, "d_max(U) = {} for m={m}", u.d_max());
        }
    }
    Ok(())
}

fn c13_decompose_round_trip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let pool = sweep3();
    for k in 0..50 {
        let u = &pool[rng.gen_range(0..pool.len())];
        let extra = rng.gen_range(0..=3usize);
        let base = oracle_facets(u, 0);
        let n = u.m() + u.d_max() + extra;
        let joined = base.iter().map(|f| f.iter().copied().chain(u.m() + u.d_max() + 1..=n).collect::<Vec<_>>());
        let delta = SimplicialComplex::new(n, joined).unwrap();
        ensure!(delta.is_shifted(), "instance {k} is not shifted");
        let found = squeeze::decompose_shifted(&delta).map_err(|e| format!("instance {k}: {e}"))?;
        let expected = Decomposition { ideal: u.clone(), cone_dim: extra as isize - 1 };
        ensure!(found == expected, "instance {k}: {found:?} vs {expected:?}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("near-maximal ideal in two variables: 7/10, 4/19, 0, 0", Duration::from_secs(1), c01_near_maximal_sequence),
        ("maximal ideals, d = 2: closed form for D(Δ_1), D(Δ_0) = m-1", Duration::from_secs(1), c02_degree_two_closed_form),
        ("maximal ideals, d = 3: closed forms for D(Δ_1), D(Δ_2)", Duration::from_secs(5), c03_degree_three_closed_forms),
        ("maximal ideals: ridge degree m+1 below t = d, ball at t = d", Duration::from_secs(10), c04_maximal_classification),
        ("minimal non-faces equal φ_t(I(U)), m, d <= 3", Duration::from_secs(30), c05_stanley_reisner_sweep),
        ("vertex 1 sheds; link and deletion laws, m, d <= 3", Duration::from_secs(60), c06_shedding_sweep),
        ("h-vector equals the degree histogram, m, d <= 3", Duration::from_secs(10), c07_h_vector_sweep),
        ("Hochster = Eliahou-Kervaire, Hilbert functions agree, m <= 3, d <= 2", Duration::from_secs(60), c08_betti_and_hilbert),
        ("Lefschetz criteria equal the rank oracle, m <= 3, d <= 4", Duration::from_secs(10), c09_lefschetz),
        ("singularity profiles strictly decrease to zero, m, d <= 3", Duration::from_secs(60), c10_monotonicity),
        ("x_m dividing the top layer gives a ball at t = d-1", Duration::from_secs(10), c11_common_divisor_ball),
        ("U <-> I(U) duality and degree bounds", Duration::from_secs(5), c12_duality),
        ("50 joined shifted complexes decompose back to (U, e)", Duration::from_secs(10), c13_decompose_round_trip),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|_| {
            if elapsed <= *limit {
                Ok(())
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(()) => println!("PASS  {:>2}  {name}  ({elapsed:.2?}, limit {limit:?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}  ({elapsed:.2?}, limit {limit:?}): {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
