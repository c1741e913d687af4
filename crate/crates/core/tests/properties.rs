use std::collections::BTreeMap;

use facetor::moment_angle::{
    contractible_a_series, link_cohomology, maz_cohomology, maz_cohomology_exhaustive,
};
use facetor::oracle::{reduced_cohomology_all, verify_complement};
use facetor::resolution::{full_differential, MonomialChain};
use facetor::taylor::{boundary_matrices, sigma_supports};
use facetor::*;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

const Q: Coefficients = Coefficients::Rationals;
const Z: Coefficients = Coefficients::Integers;

fn complement(max_m: usize, max_s: usize) -> impl Strategy<Value = Complement> {
    (1..=max_m).prop_flat_map(move |m| {
        prop::collection::vec(0u32..(1 << m), 0..=max_s).prop_map(move |bits| {
            Complement::new(m, bits.into_iter().map(VertexSet::from_bits).collect()).unwrap()
        })
    })
}

fn with_omega(max_m: usize, max_s: usize) -> impl Strategy<Value = (Complement, VertexSet)> {
    complement(max_m, max_s).prop_flat_map(|p| {
        let m = p.m();
        (Just(p), (0u32..(1 << m)).prop_map(VertexSet::from_bits))
    })
}

fn small_poly() -> impl Strategy<Value = GradedDims> {
    prop::collection::vec((1u32..=4, 0u64..=2), 0..=2).prop_map(GradedDims::from_terms)
}

type Shape = BTreeMap<(usize, VertexSet), (usize, Vec<BigInt>)>;

fn shape(tor: &BigradedTor) -> Shape {
    tor.nonzero_blocks()
        .map(|b| ((b.q, b.sigma), (b.group.rank, b.group.torsion.clone())))
        .collect()
}

fn dividing(torsion: &[BigInt], p: u64) -> usize {
    torsion.iter().filter(|t| t.is_multiple_of(&BigInt::from(p))).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn differential_squares_to_zero(p in complement(7, 6)) {
        for bits in 0..1u32 << p.len() {
            let c = Chain::generator(TaylorGenerator::from_bits(bits));
            prop_assert!(c.boundary(&p).boundary(&p).is_zero());
        }
    }

    #[test]
    fn full_differential_squares_and_specializes(p in complement(6, 5)) {
        for bits in 0..1u32 << p.len() {
            let u = TaylorGenerator::from_bits(bits);
            let d = full_differential(&p, &MonomialChain::generator(p.m(), u));
            prop_assert!(full_differential(&p, &d).is_zero());
            prop_assert_eq!(d.specialize(), reduced_differential(&p, u));
        }
    }

    #[test]
    fn supports_partition_generators(p in complement(7, 6)) {
        let blocks = sigma_supports(&p);
        prop_assert_eq!(blocks.iter().map(|b| b.count()).sum::<usize>(), 1 << p.len());
        for b in &blocks {
            for (q, gens) in b.generators.iter().enumerate() {
                for u in gens {
                    prop_assert_eq!(u.degree(), q);
                    prop_assert_eq!(u.total(&p), b.sigma);
                }
            }
            let ds = boundary_matrices(&p, b.sigma);
            for w in ds.windows(2) {
                prop_assert!((&w[0] * &w[1]).is_zero());
            }
        }
    }

    #[test]
    fn oracle_agrees(p in complement(6, 5)) {
        for coeff in [Q, Coefficients::PrimeField(3), Z] {
            let report = verify_complement(&p, coeff).unwrap();
            prop_assert!(report.passed(), "{:?}", report.failures().next());
        }
    }

    #[test]
    fn universal_coefficients(p in complement(6, 5)) {
        let z = tor_bigraded(&p, Z).unwrap();
        for prime in [2u64, 3] {
            let f = tor_bigraded(&p, Coefficients::PrimeField(prime)).unwrap();
            for b in f.blocks() {
                let here = z.block(b.q, b.sigma).map_or((0, vec![]), |x| (x.group.rank, x.group.torsion.clone()));
                let below = b.q.checked_sub(1)
                    .and_then(|q| z.block(q, b.sigma))
                    .map_or(0, |x| dividing(&x.group.torsion, prime));
                prop_assert_eq!(b.group.rank, here.0 + dividing(&here.1, prime) + below);
            }
        }
        let q = tor_bigraded(&p, Q).unwrap();
        for b in q.blocks() {
            prop_assert_eq!(b.group.rank, z.block(b.q, b.sigma).unwrap().group.rank);
        }
    }

    #[test]
    fn presentation_independence(p in complement(6, 6)) {
        let minimal = p.minimalize();
        prop_assert!(p.equivalent(&minimal).unwrap());
        prop_assert_eq!(
            SimplicialComplex::from_complement(&p),
            SimplicialComplex::from_complement(&minimal)
        );
        prop_assert_eq!(shape(&tor_bigraded(&p, Z).unwrap()), shape(&tor_bigraded(&minimal, Z).unwrap()));
    }

    #[test]
    fn complex_round_trip(p in complement(7, 6)) {
        let k = SimplicialComplex::from_complement(&p);
        match k.to_complement() {
            Ok(missing) => {
                prop_assert!(missing.equivalent(&p).unwrap());
                prop_assert_eq!(SimplicialComplex::from_complement(&missing), k);
            }
            Err(e) => {
                prop_assert_eq!(e, Error::VoidComplex);
                prop_assert!(p.contains_empty_set());
            }
        }
    }

    #[test]
    fn product_laws(p in complement(6, 4)) {
        let tor = tor_bigraded(&p, Q).unwrap();
        let table = tor.multiplication_table().unwrap();
        tor.check_associativity().unwrap();
        for (i, row) in table.entries.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let (a, b) = (&table.basis[i], &table.basis[j]);
                prop_assert_eq!(c.q, a.q + b.q);
                prop_assert_eq!(c.sigma, a.sigma.union(b.sigma));
                if !a.sigma.is_disjoint(b.sigma) {
                    prop_assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn char_fn_is_product_of_complements(p in complement(6, 5)) {
        let k = SimplicialComplex::from_complement(&p);
        let f = SupportFunction::char_fn(&k).unwrap();
        prop_assert_eq!(&f, &SupportFunction::complement_product(&p).unwrap());
        let mut parity = BTreeMap::new();
        for b in sigma_supports(&p) {
            parity.insert(b.sigma, b.count() % 2 == 1);
        }
        let mut from_dims = SupportFunction::zero(p.m()).unwrap();
        for (sigma, odd) in parity {
            if odd {
                from_dims = &from_dims + &SupportFunction::mu(p.m(), sigma).unwrap();
            }
        }
        prop_assert_eq!(f, from_dims);
    }

    #[test]
    fn compression_laws((p, omega) in with_omega(6, 5), g_bits in any::<u64>()) {
        let m = p.m();
        let k = SimplicialComplex::from_complement(&p);
        let f = SupportFunction::char_fn(&k).unwrap();
        let compressed = SupportFunction::char_fn(&SimplicialComplex::from_complement(&p.compress(omega))).unwrap();
        prop_assert_eq!(f.compress(omega), compressed);
        prop_assert_eq!(SupportFunction::char_fn(&k.star(omega)).unwrap(), f.compress(omega));
        let g = SupportFunction::from_support(m, VertexSet::full(m).subsets().filter(|t| g_bits >> t.bits() & 1 == 1)).unwrap();
        prop_assert_eq!((&f + &g).compress(omega), &f.compress(omega) + &g.compress(omega));
        prop_assert_eq!((&f * &g).compress(omega), &f.compress(omega) * &g.compress(omega));
        for sigma in VertexSet::full(m).subsets() {
            prop_assert_eq!(
                SupportFunction::mu(m, sigma).unwrap().compress(omega),
                SupportFunction::mu(m, sigma.difference(omega)).unwrap()
            );
        }
    }

    #[test]
    fn star_and_link((p, omega) in with_omega(6, 5)) {
        let k = SimplicialComplex::from_complement(&p);
        let star = k.star(omega);
        prop_assert_eq!(&star, &SimplicialComplex::from_complement(&p.compress(omega)));
        let rest = VertexSet::full(p.m()).difference(omega);
        prop_assert_eq!(k.link(omega), star.full_subcomplex(rest));
        for coeff in [Q, Z] {
            let expected: BTreeMap<isize, (usize, Vec<BigInt>)> = reduced_cohomology_all(&k.link(omega), coeff)
                .unwrap()
                .into_iter()
                .filter(|(_, g)| !g.is_zero())
                .map(|(n, g)| (n, (g.rank, g.torsion)))
                .collect();
            let got: BTreeMap<isize, (usize, Vec<BigInt>)> = link_cohomology(&p, omega, coeff)
                .unwrap()
                .into_iter()
                .map(|(n, g)| (n, (g.rank, g.torsion)))
                .collect();
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn moment_angle_identities(p in complement(5, 4), x in small_poly(), a in small_poly()) {
        let m = p.m();
        prop_assert_eq!(maz_cohomology(&p, &PairSpec::d2s1(m), Q).unwrap(), zk_poincare(&p, Q).unwrap());
        prop_assert_eq!(maz_cohomology(&p, &PairSpec::s2s1(m), Q).unwrap(), s2s1_poincare(&p, Q).unwrap());
        let contractible = PairSpec::uniform(m, x.clone(), GradedDims::zero()).unwrap();
        prop_assert_eq!(
            maz_cohomology(&p, &contractible, Q).unwrap(),
            contractible_a_series(&p, &contractible)
        );
        let general = PairSpec::uniform(m, x, a).unwrap();
        prop_assert_eq!(
            maz_cohomology_exhaustive(&p, &general, Q).unwrap(),
            maz_cohomology(&p, &general, Q).unwrap()
        );
    }

    #[test]
    fn smith_form_contract(rows in 0usize..7, cols in 0usize..7, seed in any::<u64>()) {
        let mut rng = facetor::random::seeded(seed);
        let m = facetor::random::random_matrix(&mut rng, rows, cols, 9);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.check(&m), Ok(()));
        prop_assert!(snf.u.is_unimodular() && snf.v.is_unimodular());
    }
}
