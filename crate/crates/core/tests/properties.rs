use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use squeezed::algebra::{self, StableOperator};
use squeezed::complex::{f_from_h, h_from_f, BallSphere};
use squeezed::homology::{self, ChainBoundary, HochsterOptions};
use squeezed::io;
use squeezed::monomial::{collect_shifted_order_ideals, monomials_of_degree, EnumerationConfig};
use squeezed::par::Exec;
use squeezed::squeeze;
use squeezed::{Monomial, OrderIdeal, SimplicialComplex};

fn sweep() -> &'static [OrderIdeal] {
    static CELL: OnceLock<Vec<OrderIdeal>> = OnceLock::new();
    CELL.get_or_init(|| {
        (1..=3)
            .flat_map(|m| collect_shifted_order_ideals(EnumerationConfig::new(m, 3)).unwrap())
            .collect()
    })
}

fn shifted_ideal() -> impl Strategy<Value = OrderIdeal> {
    (0..sweep().len()).prop_map(|k| sweep()[k].clone())
}

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(1u32..(1 << n), 1..6).prop_map(move |masks| {
            let facets = masks.iter().map(|&s| (1..=n).filter(|v| s >> (v - 1) & 1 == 1).collect::<Vec<_>>());
            SimplicialComplex::new(n, facets).unwrap()
        })
    })
}

fn rank_over_q(rows: usize, cols: usize, entries: &[(usize, usize, i8)]) -> usize {
    let mut a = vec![vec![BigRational::zero(); cols]; rows];
    for &(r, c, v) in entries {
        a[r][c] += BigRational::from_integer(v.into());
    }
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][c].clone();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let factor = a[r][c].clone() * inv.clone();
                let pivot_row = a[rank].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row).skip(c) {
                    *x -= factor.clone() * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f_and_h_are_inverse(h in prop::collection::vec(-20i64..20, 1..8)) {
        prop_assert_eq!(h_from_f(&f_from_h(&h)), h);
    }

    #[test]
    fn h_vector_matches_f_vector(delta in complex()) {
        prop_assume!(delta.is_pure());
        let f: Vec<i64> = delta.f_vector().into_iter().map(|x| x as i64).collect();
        prop_assert_eq!(delta.h_vector().unwrap(), h_from_f(&f));
    }

    #[test]
    fn rank_agrees_with_rational_elimination(
        rows in 1usize..7,
        cols in 1usize..7,
        raw in prop::collection::vec((0usize..7, 0usize..7, -2i8..=2), 0..30),
    ) {
        let mut cells = std::collections::BTreeMap::new();
        for (r, c, v) in raw {
            cells.insert((r % rows, c % cols), v);
        }
        let entries: Vec<_> = cells.into_iter().filter(|&(_, v)| v != 0).map(|((r, c), v)| (r, c, v)).collect();
        prop_assert_eq!(homology::matrix_rank(rows, cols, &entries), rank_over_q(rows, cols, &entries));
    }

    #[test]
    fn boundary_squares_to_zero(delta in complex()) {
        let chain = ChainBoundary::new(&delta);
        for k in 0..=chain.dim() {
            prop_assert!(chain.composition_vanishes(k));
        }
    }

    #[test]
    fn euler_poincare(delta in complex()) {
        let f = delta.f_vector();
        let betti = homology::reduced_betti(&delta);
        let sign = |k: usize| if k.is_multiple_of(2) { 1i64 } else { -1 };
        let chi_f: i64 = f.iter().enumerate().map(|(k, &x)| sign(k) * x as i64).sum();
        let chi_b: i64 = betti.iter().enumerate().map(|(k, &x)| sign(k) * x as i64).sum();
        prop_assert_eq!(chi_f, chi_b);
    }

    #[test]
    fn phi_preserves_degree_and_is_squarefree(
        m in 1usize..=4,
        raw in prop::collection::vec(1usize..=4, 0..=6),
        l in 0usize..=6,
    ) {
        let mut idx: Vec<usize> = raw.into_iter().map(|i| (i - 1) % m + 1).collect();
        idx.sort_unstable();
        let u = Monomial::from_indices(m, &idx);
        let image = algebra::apply_operator(&StableOperator::Phi(l), &u);
        prop_assert_eq!(image.degree(), u.degree());
        prop_assert!(image.is_squarefree());
    }

    #[test]
    fn containment_reverses_under_complement(u in shifted_ideal(), v in shifted_ideal()) {
        prop_assume!(u.m() == v.m());
        let (small, big) = if u.len() <= v.len() { (u, v) } else { (v, u) };
        prop_assume!(small.iter().all(|w| big.contains(w)));
        let (i_small, i_big) = (small.ideal(), big.ideal());
        for g in i_big.generators() {
            prop_assert!(i_small.contains(g));
        }
    }

    #[test]
    fn ideal_generators_are_minimal_non_members(u in shifted_ideal()) {
        let m = u.m();
        let i = u.ideal();
        for k in 0..=u.d_max() + 2 {
            for w in monomials_of_degree(m, k) {
                prop_assert_eq!(i.contains(&w), !u.contains(&w));
            }
        }
        for g in i.generators() {
            prop_assert!(!u.contains(g));
            for j in g.support() {
                prop_assert!(u.contains(&g.div_var(j).unwrap()));
            }
        }
    }

    #[test]
    fn betti_numerator_matches_hilbert_function(u in shifted_ideal()) {
        let ideal = u.ideal();
        let n = u.m();
        let up_to = u.d_max() + 4;
        let table = algebra::ek_betti(&ideal).unwrap();
        // K(z) = 1 - Σ (-1)^i β_{i,j} z^j, and HF = coefficients of K(z) / (1-z)^n
        let mut k = vec![0i64; up_to + 1];
        k[0] = 1;
        for (j, s) in table.alternating_sums() {
            if j <= up_to {
                k[j] -= s;
            }
        }
        let expected: Vec<u64> = (0..=up_to)
            .map(|deg| {
                (0..=deg)
                    .map(|j| k[j] * squeezed::complex::binomial(deg - j + n - 1, n - 1) as i64)
                    .sum::<i64>() as u64
            })
            .collect();
        prop_assert_eq!(algebra::hilbert_function(&ideal, n, up_to), expected);
    }

    #[test]
    fn json_round_trips(u in shifted_ideal(), t in 0usize..=3) {
        prop_assert_eq!(&io::parse_order_ideal(&io::order_ideal_json(&u)).unwrap(), &u);
        let ideal = u.ideal();
        prop_assert_eq!(io::parse_ideal(&io::ideal_json(&ideal)).unwrap(), ideal);
        let delta = squeeze::build(&u, t.min(u.d_max() + 1)).unwrap();
        prop_assert_eq!(io::parse_complex(&io::complex_json(&delta)).unwrap(), delta);
    }

    #[test]
    fn execution_modes_agree(u in shifted_ideal()) {
        let seq = squeeze::sing_index_profile_with(&u, Exec::Sequential).unwrap();
        let par = squeeze::sing_index_profile_with(&u, Exec::Parallel).unwrap();
        prop_assert_eq!(seq, par);
        let delta = squeeze::build(&u, 1).unwrap();
        prop_assume!(delta.n() <= 10);
        let a = homology::hochster_betti(&delta, HochsterOptions { exec: Exec::Sequential, ..Default::default() }).unwrap();
        let b = homology::hochster_betti(&delta, HochsterOptions { exec: Exec::Parallel, ..Default::default() }).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn classification_consistent_with_homology(u in shifted_ideal(), t in 0usize..=3) {
        let delta = squeeze::build(&u, t.min(u.d_max())).unwrap();
        let c = delta.classify_ball_sphere(200_000).unwrap();
        prop_assert_ne!(c.homology_agrees, Some(false));
        let betti = homology::reduced_betti(&delta);
        let top = *betti.last().unwrap();
        match c.verdict {
            BallSphere::Ball => prop_assert!(betti.iter().all(|&b| b == 0)),
            BallSphere::Sphere => prop_assert_eq!(top, 1),
            BallSphere::Neither | BallSphere::Unknown => {}
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for (m, d) in [(1, 3), (2, 3), (3, 3), (2, 4)] {
        let free: Vec<Monomial> = (2..=d).flat_map(|k| monomials_of_degree(m, k)).collect();
        assert!(free.len() <= 20);
        let fixed: Vec<Monomial> = (0..=1).flat_map(|k| monomials_of_degree(m, k)).collect();
        let mut brute = BTreeSet::new();
        for s in 0u32..(1 << free.len()) {
            let members = fixed.iter().cloned().chain(
                free.iter().enumerate().filter(|(b, _)| s >> b & 1 == 1).map(|(_, w)| w.clone()),
            );
            if let Ok(u) = OrderIdeal::new(m, members) {
                if u.is_shifted() {
                    brute.insert(format!("{:?}", u));
                }
            }
        }
        let enumerated = collect_shifted_order_ideals(EnumerationConfig::new(m, d)).unwrap();
        let listed: BTreeSet<String> = enumerated.iter().map(|u| format!("{:?}", u)).collect();
        assert_eq!(listed.len(), enumerated.len(), "duplicates for m={m}, d={d}");
        assert_eq!(listed, brute, "m={m}, d={d}");
    }
}
