//! The bundled verification suite: eight end-to-end checks over the shipped
//! curve files, shared by the `verify-paper` command and the acceptance
//! tests. Every expected value is asserted exactly as stated; when a
//! computation honestly disagrees, the check fails and reports both sides.

use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use twodiv_core::{
    count_points, decomposition_group, divisible_local, h1_table, halve_local, parse_ratfunc,
    places_up_to_degree, sha1_order, ArtinSchreierClass, BinaryField, Curve, Divisibility,
    FieldElement, LaurentSeries, LocalCurve, LocalField, Place, Point, Poly, RatFunc, Sha1Reason,
    Sha1Verdict, DEFAULT_PRECISION,
};

use crate::crossval::cross_validate;
use crate::spec::{mw_checks, ConstantCurveFile, LoadedConstantCurve, LoadedSpec};

/// File names of the bundled inputs, in the order they are loaded.
pub const BUNDLED_FILES: [&str; 4] =
    ["prop31.json", "prop32.json", "prop34_aux.json", "constant_b.json"];

/// The four bundled inputs, parsed and validated.
pub struct BundledSpecs {
    /// Rank-zero curve with a genuine local-global obstruction at level 3.
    pub obstructed: LoadedSpec,
    /// Rank-one curve with a presentation, used for the divisibility sweeps.
    pub rank_one: LoadedSpec,
    /// Label of the constant-curve comparison file.
    pub aux_label: String,
    /// The two constant curves whose Frobenius traces are compared.
    pub aux: Vec<LoadedConstantCurve>,
    /// Constant-coefficient curve with cyclic Galois group.
    pub constant_b: LoadedSpec,
}

impl BundledSpecs {
    /// The copies compiled into the binary.
    pub fn embedded() -> Result<BundledSpecs> {
        BundledSpecs::from_sources(
            include_str!("../specs/prop31.json"),
            include_str!("../specs/prop32.json"),
            include_str!("../specs/prop34_aux.json"),
            include_str!("../specs/constant_b.json"),
        )
    }

    /// Load the same four files from a directory instead (negative controls
    /// tamper with copies and point the tool here).
    pub fn from_dir(dir: &Path) -> Result<BundledSpecs> {
        let read = |name: &str| {
            fs::read_to_string(dir.join(name))
                .with_context(|| format!("reading {}", dir.join(name).display()))
        };
        BundledSpecs::from_sources(
            &read(BUNDLED_FILES[0])?,
            &read(BUNDLED_FILES[1])?,
            &read(BUNDLED_FILES[2])?,
            &read(BUNDLED_FILES[3])?,
        )
    }

    fn from_sources(
        obstructed: &str,
        rank_one: &str,
        aux: &str,
        constant_b: &str,
    ) -> Result<BundledSpecs> {
        let aux_file: ConstantCurveFile =
            serde_json::from_str(aux).context("parsing the constant-curve comparison file")?;
        Ok(BundledSpecs {
            obstructed: LoadedSpec::from_json(obstructed).context("loading the obstructed curve")?,
            rank_one: LoadedSpec::from_json(rank_one).context("loading the rank-one curve")?,
            aux_label: aux_file.label.clone(),
            aux: aux_file.load()?,
            constant_b: LoadedSpec::from_json(constant_b)
                .context("loading the constant-coefficient curve")?,
        })
    }
}

/// One expected-versus-computed comparison inside a check.
pub struct Detail {
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// Outcome of one numbered check.
pub struct CheckResult {
    pub index: usize,
    pub name: String,
    pub pass: bool,
    pub details: Vec<Detail>,
    pub elapsed_ms: u128,
}

fn expect_eq(
    details: &mut Vec<Detail>,
    check: &str,
    expected: impl fmt::Display,
    computed: impl fmt::Display,
) -> bool {
    let expected = expected.to_string();
    let computed = computed.to_string();
    let pass = expected == computed;
    details.push(Detail { check: check.to_string(), expected, computed, pass });
    pass
}

fn run_check(
    index: usize,
    name: &str,
    body: impl FnOnce(&mut Vec<Detail>) -> Result<()>,
) -> CheckResult {
    let start = Instant::now();
    let mut details = Vec::new();
    if let Err(err) = body(&mut details) {
        details.push(Detail {
            check: "execution".into(),
            expected: "completes".into(),
            computed: format!("{err:#}"),
            pass: false,
        });
    }
    let pass = details.iter().all(|d| d.pass);
    CheckResult { index, name: name.to_string(), pass, details, elapsed_ms: start.elapsed().as_millis() }
}

/// Run the whole suite in order. Infallible by construction: internal errors
/// become failing details rather than aborting the run.
pub fn run_all(specs: &BundledSpecs) -> Vec<CheckResult> {
    vec![
        check_h1_survey(),
        check_obstructed_pipeline(specs),
        check_rank_one_pipeline(specs),
        check_torsion_formulas(),
        check_point_counts(specs),
        check_local_solvers(specs),
        check_oracle_agreement(specs),
        check_class_invariance(specs),
    ]
}

fn f2() -> BinaryField {
    BinaryField::new(1).expect("the prime field always exists")
}

fn rat(text: &str) -> RatFunc {
    parse_ratfunc(text, f2()).expect("fixed expression parses")
}

/// Check 1: survey `H¹(G, Z/2^N)` for every subgroup with `N ≤ 5` and hold
/// it against the closed form (order 2 iff `N ≥ 3` and `-1 ∈ G`), with
/// vanishing restrictions to proper subgroups.
pub fn check_h1_survey() -> CheckResult {
    run_check(1, "cohomology survey against the closed form", |details| {
        let rows = h1_table(5)?;
        let disagreements: Vec<String> = rows
            .iter()
            .filter(|r| !r.agrees)
            .map(|r| {
                format!(
                    "exponent {}, elements {:?}, computed {}, predicted {}",
                    r.exponent, r.elements, r.computed_order, r.predicted_order
                )
            })
            .collect();
        expect_eq(
            details,
            &format!("closed form on all {} subgroup rows", rows.len()),
            "agreement on every row",
            if disagreements.is_empty() {
                "agreement on every row".to_string()
            } else {
                format!("{} disagreement(s): {}", disagreements.len(), disagreements.join("; "))
            },
        );
        let nonvanishing = rows.iter().filter(|r| !r.proper_restrictions_zero).count();
        expect_eq(details, "restrictions to proper subgroups vanish", 0, nonvanishing);
        Ok(())
    })
}

/// Check 2: the obstructed curve has a level-3 obstruction of order exactly
/// 2, certified by proper decomposition groups at both candidate places and
/// cross-checked against the cocycle enumeration.
pub fn check_obstructed_pipeline(specs: &BundledSpecs) -> CheckResult {
    run_check(2, "rank-zero curve with a genuine obstruction", |details| {
        let verdict = sha1_order(&specs.obstructed.curve, 3)?;
        expect_eq(details, "obstruction order at level 3", 2, verdict.order());
        expect_eq(
            details,
            "reason",
            "noncyclic Galois group with no full decomposition group",
            verdict.reason(),
        );
        let places: Vec<String> =
            verdict.decomposition().iter().map(|r| r.place().to_string()).collect();
        expect_eq(details, "candidate places", "(t), inf", places.join(", "));
        let orders: Vec<String> =
            verdict.decomposition().iter().map(|r| r.group_order().to_string()).collect();
        expect_eq(details, "decomposition group orders", "2, 2", orders.join(", "));
        let cv = cross_validate(&verdict);
        expect_eq(
            details,
            "cocycle enumeration agrees",
            "orders 2 = 2",
            format!("orders {} = {}", cv.galois_order, cv.cohomology_order),
        );
        Ok(())
    })
}

/// Check 3: the rank-one curve passes its presentation checks; its
/// obstruction has order 2 at every requested level `n = 3, 4, 5` (all routed
/// through effective level 3 because `j` is an 8th but not a 16th power); the
/// point `4P` is locally divisible by 8 everywhere sampled yet is not `8`
/// times anything in the presentation, even up to torsion.
pub fn check_rank_one_pipeline(specs: &BundledSpecs) -> CheckResult {
    run_check(3, "rank-one curve with a divisibility gap", |details| {
        let loaded = &specs.rank_one;
        let checks = mw_checks(loaded, 3)?;
        let failed: Vec<&str> =
            checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        expect_eq(
            details,
            &format!("presentation checks ({} run)", checks.len()),
            "all pass",
            if failed.is_empty() { "all pass".to_string() } else { failed.join(", ") },
        );

        let j = loaded.curve.j_invariant();
        expect_eq(
            details,
            "j-invariant 16th root",
            "none",
            match j.pow2_root(4)? {
                None => "none".to_string(),
                Some(r) => format!("{r}"),
            },
        );
        for n in [3u32, 4, 5] {
            let verdict = sha1_order(&loaded.curve, n)?;
            expect_eq(
                details,
                &format!("order and effective level at n = {n}"),
                "order 2 at level 3",
                format!("order {} at level {}", verdict.order(), verdict.torsion().level()),
            );
        }

        let mw = loaded.require_mw()?;
        let four_p = loaded.curve.mul_scalar(4, &mw.free[0]);
        let places = places_up_to_degree(loaded.field, 3);
        let sweep: Vec<(Place, Divisibility)> = places
            .par_iter()
            .map(|v| {
                divisible_local(&loaded.curve, &four_p, 3, v, DEFAULT_PRECISION)
                    .map(|d| (v.clone(), d))
                    .with_context(|| format!("local divisibility at {v}"))
            })
            .collect::<Result<_>>()?;
        let yes = sweep.iter().filter(|(_, d)| *d == Divisibility::Yes).count();
        let indeterminate =
            sweep.iter().filter(|(_, d)| *d == Divisibility::Indeterminate).count();
        expect_eq(
            details,
            &format!("4P divisible by 8 at all {} places (degree <= 3 and infinity)", sweep.len()),
            format!("yes at {}, indeterminate at 0", sweep.len()),
            format!("yes at {yes}, indeterminate at {indeterminate}"),
        );

        let element = mw.group.element(vec![4], vec![0])?;
        expect_eq(
            details,
            "4P in 8E(k)",
            "not divisible",
            if mw.group.is_divisible(&element, 8) { "divisible" } else { "not divisible" },
        );
        expect_eq(
            details,
            "4P in 8E(k) + torsion",
            "not divisible",
            if mw.group.is_divisible_up_to_torsion(&element, 8) {
                "divisible"
            } else {
                "not divisible"
            },
        );
        Ok(())
    })
}

/// Check 4: over random small binary fields, the closed-form 4-torsion point
/// always has exact order 4 and doubles onto `(0, √b)`, and the abscissa
/// duplication formula matches honest point doubling.
pub fn check_torsion_formulas() -> CheckResult {
    run_check(4, "torsion and duplication formulas over random fields", |details| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x746f7273);
        // Scanning for the least embedding root is quadratic in the field
        // order, so compute each degree-doubling embedding once.
        let mut embeddings: Vec<Option<twodiv_core::algebra::FieldEmbedding>> = vec![None; 9];
        let mut torsion_ok = 0usize;
        for _ in 0..100 {
            let (field, curve) = random_constant_curve(&mut rng, 8);
            let (curve, u) = match curve.a().artin_schreier_root() {
                Some(u) => (curve, u),
                None => {
                    // Trace is killed by a quadratic extension, so the
                    // 4-torsion abscissa always lives one step up.
                    let emb = match &embeddings[field.degree()] {
                        Some(emb) => *emb,
                        None => {
                            let ext = BinaryField::new(field.degree() * 2)?;
                            let emb = field
                                .embed_into(ext)
                                .context("doubling the field degree keeps it a subfield")?;
                            embeddings[field.degree()] = Some(emb);
                            emb
                        }
                    };
                    let a = emb.map(*curve.a());
                    let u = a
                        .artin_schreier_root()
                        .context("the quadratic extension kills the obstruction to u")?;
                    (Curve::new(a, emb.map(*curve.b()))?, u)
                }
            };
            let quarter = curve.four_torsion(&u)?;
            let half = curve.two_torsion()?;
            let expected_half = Point::affine(curve.b().field().zero(), curve.b().sqrt());
            // Order exactly 4: doubling once lands on 2-torsion (not at
            // infinity), doubling twice does not.
            if !curve.double(&quarter).is_infinity()
                && curve.double(&curve.double(&quarter)).is_infinity()
                && curve.double(&quarter) == half
                && half == expected_half
            {
                torsion_ok += 1;
            }
        }
        expect_eq(details, "4-torsion order and doubling image (100 curves)", 100, torsion_ok);

        let mut duplication_ok = 0usize;
        for _ in 0..1000 {
            let (field, curve) = random_constant_curve(&mut rng, 8);
            let p = random_affine_point(&mut rng, field, &curve);
            let (x, _) = p.coordinates().expect("sampled point is affine");
            if x.is_zero() {
                // Order-2 point: duplication lands at infinity, outside the
                // abscissa formula's domain.
                duplication_ok += usize::from(curve.double(&p).is_infinity());
                continue;
            }
            let doubled = curve.double(&p);
            let via_formula = curve.x_double(x)?;
            duplication_ok += usize::from(
                doubled.coordinates().map(|(dx, _)| *dx == via_formula).unwrap_or(false),
            );
        }
        expect_eq(details, "abscissa duplication vs point doubling (1000 points)", 1000, duplication_ok);
        Ok(())
    })
}

/// Check 5: point counts and Frobenius data of the two bundled constant
/// curves, and the quadratic-field comparison separating their isogeny
/// classes. The stated expectations are asserted verbatim.
pub fn check_point_counts(specs: &BundledSpecs) -> CheckResult {
    run_check(5, "constant-curve point counts and Frobenius fields", |details| {
        anyhow::ensure!(specs.aux.len() == 2, "the comparison file must hold two curves");
        let expectations = [(4u64, -1i64, -7i64), (6, -1, -15)];
        let mut discs = Vec::new();
        for (c, (count, trace, disc)) in specs.aux.iter().zip(expectations) {
            let (got_count, got_trace) = count_points(&c.curve);
            let got_disc = got_trace * got_trace - 4 * c.field.order() as i64;
            discs.push(got_disc);
            expect_eq(
                details,
                &format!("count over F_{}", c.spec.q),
                count,
                got_count,
            );
            expect_eq(details, &format!("trace over F_{}", c.spec.q), trace, got_trace);
            expect_eq(details, &format!("discriminant over F_{}", c.spec.q), disc, got_disc);
        }
        let kernels: Vec<i64> = discs.iter().map(|&d| squarefree_kernel(d)).collect();
        expect_eq(
            details,
            "distinct quadratic Frobenius fields",
            "non-isogenous",
            if kernels[0] != kernels[1] { "non-isogenous" } else { "possibly isogenous" },
        );
        Ok(())
    })
}

fn squarefree_kernel(d: i64) -> i64 {
    assert!(d != 0);
    let mut n = d.unsigned_abs();
    let mut kernel: i64 = d.signum();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e % 2 == 1 {
                kernel *= p as i64;
            }
        }
        p += 1;
    }
    kernel * n as i64
}

/// Check 6: the local solvers against their defining equations — random
/// Artin–Schreier solves, square-root round trips, and halving chains that
/// double back to their starting point.
pub fn check_local_solvers(specs: &BundledSpecs) -> CheckResult {
    run_check(6, "local solvers against their defining equations", |details| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6c6f63);
        let precision = 32i64;
        let f4 = BinaryField::new(2)?;
        let mut local_fields = Vec::new();
        for base in [f2(), f4] {
            for text in ["t", "t+1"] {
                let place = Place::finite(
                    parse_ratfunc(text, base)?.as_poly().expect("monomial").clone(),
                );
                local_fields.push(LocalField::new(base, &place)?);
            }
            local_fields.push(LocalField::new(base, &Place::Infinity)?);
        }
        let quadratic = Place::finite(rat("t^2+t+1").as_poly().expect("polynomial").clone());
        local_fields.push(LocalField::new(f2(), &quadratic)?);

        let mut solves_ok = 0usize;
        for i in 0..1000 {
            let lf = &local_fields[i % local_fields.len()];
            let c = random_integral_series(&mut rng, lf, precision, true);
            let w = c.artin_schreier_solve().context("solvable by construction")?;
            let residual = w.square().add(&w).sub(&c);
            solves_ok += usize::from(residual.is_zero_within_precision());
        }
        expect_eq(details, "Artin-Schreier residuals vanish (1000 solves)", 1000, solves_ok);

        let mut sqrt_ok = 0usize;
        for i in 0..1000 {
            let lf = &local_fields[i % local_fields.len()];
            let w = random_integral_series(&mut rng, lf, precision, false);
            let root = w.square().sqrt().context("squares admit square roots")?;
            sqrt_ok += usize::from(root.eq_within_precision(&w));
        }
        expect_eq(details, "square-root round trips (1000 series)", 1000, sqrt_ok);

        let curves = [&specs.obstructed.curve, &specs.rank_one.curve];
        let good_places: Vec<Place> = ["t+1", "t^2+t+1", "t^3+t+1"]
            .iter()
            .map(|text| Place::finite(rat(text).as_poly().expect("polynomial").clone()))
            .collect();
        let mut halvings_ok = 0usize;
        for i in 0..500 {
            let curve = curves[i % curves.len()];
            // A fibre family can be inert at a given place (tiny residue
            // fields leave no abscissae to resample), so rotate places until
            // a point shows up.
            let mut r0 = None;
            let mut local = None;
            for offset in 0..good_places.len() {
                let place = &good_places[(i / curves.len() + offset) % good_places.len()];
                let lc = LocalCurve::new(curve, place, 48)?;
                if let Some(point) = random_local_point(&mut rng, &lc)? {
                    r0 = Some(point);
                    local = Some(lc);
                    break;
                }
            }
            let (Some(r0), Some(lc)) = (r0, local) else {
                continue;
            };
            let q = lc.curve().double(&r0);
            let halves = halve_local(lc.curve(), &q)?;
            halvings_ok += usize::from(
                !halves.is_empty()
                    && halves.iter().all(|h| lc.curve().double(h).agrees_with(&q)),
            );
        }
        expect_eq(details, "halves double back (500 halvings)", 500, halvings_ok);
        Ok(())
    })
}

/// Check 7: the place-by-place criterion and the cocycle enumeration agree
/// on the bundled curves, two pinned edge cases, and twenty generated curves
/// whose `j` is an 8th power, with every reason code exercised.
pub fn check_oracle_agreement(specs: &BundledSpecs) -> CheckResult {
    run_check(7, "criterion versus cocycle enumeration", |details| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6f7261);
        let mut curves: Vec<(String, Curve<RatFunc>)> = vec![
            ("bundled obstructed".into(), specs.obstructed.curve.clone()),
            ("bundled rank-one".into(), specs.rank_one.curve.clone()),
            ("bundled constant-b".into(), specs.constant_b.curve.clone()),
            (
                "pinned full-place".into(),
                Curve::new(rat("t"), rat("1")).expect("b is nonzero"),
            ),
        ];
        let denominators =
            ["1", "t", "t^2", "t^3", "t+1", "t^2+1"].map(|text| rat(text).num().clone());
        for i in 0..20 {
            let g = loop {
                let g = random_poly(&mut rng, f2(), 2);
                if !g.is_zero() {
                    break g;
                }
            };
            let eighth = RatFunc::from_poly(g).pow(8);
            let b = if rng.gen() { eighth.inverse().expect("nonzero") } else { eighth };
            let num = random_poly(&mut rng, f2(), 4);
            let den = denominators[rng.gen_range(0..denominators.len())].clone();
            let a = RatFunc::new(num, den)?;
            curves.push((format!("generated #{}", i + 1), Curve::new(a, b)?));
        }

        let mut agreements = 0usize;
        let mut mismatches = Vec::new();
        let mut seen = [false; 3];
        for (label, curve) in &curves {
            let verdict = sha1_order(curve, 3)?;
            seen[match verdict.reason() {
                Sha1Reason::CyclicGalois => 0,
                Sha1Reason::FullDecompositionGroupAt(_) => 1,
                Sha1Reason::NonCyclicNoFullPlace => 2,
            }] = true;
            let cv = cross_validate(&verdict);
            if cv.agree {
                agreements += 1;
            } else {
                mismatches.push(format!(
                    "{label}: criterion {} vs enumeration {}",
                    cv.galois_order, cv.cohomology_order
                ));
            }
        }
        expect_eq(
            details,
            &format!("agreement on all {} curves", curves.len()),
            format!("{} agree", curves.len()),
            if mismatches.is_empty() {
                format!("{agreements} agree")
            } else {
                format!("{agreements} agree; {}", mismatches.join("; "))
            },
        );
        expect_eq(
            details,
            "reason codes exercised",
            "cyclic, full place, noncyclic without full place",
            {
                let names = ["cyclic", "full place", "noncyclic without full place"];
                let listed: Vec<&str> = names
                    .iter()
                    .zip(seen)
                    .filter(|(_, s)| *s)
                    .map(|(n, _)| *n)
                    .collect();
                listed.join(", ")
            },
        );
        Ok(())
    })
}

/// Check 8: verdicts depend only on the Artin–Schreier classes — shifting
/// `a` by `h² + h` changes nothing, and rerunning the decomposition groups
/// on a shifted representative of the `b`-class reproduces every report.
pub fn check_class_invariance(specs: &BundledSpecs) -> CheckResult {
    run_check(8, "invariance under coboundary shifts", |details| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x696e76);
        let bases = [
            ("obstructed", &specs.obstructed.curve),
            ("rank-one", &specs.rank_one.curve),
            ("constant-b", &specs.constant_b.curve),
        ];
        let references: Vec<Sha1Verdict> = bases
            .iter()
            .map(|(_, curve)| sha1_order(curve, 3))
            .collect::<Result<_, _>>()?;

        let mut shift_ok = 0usize;
        let mut reports_ok = 0usize;
        let trials = 50usize;
        for i in 0..trials {
            let (label, base) = bases[i % bases.len()];
            let reference = &references[i % bases.len()];
            let h = random_ratfunc(&mut rng, 3, 3);
            let wiggle = &h.square() + &h;

            let shifted = Curve::new(base.a() + &wiggle, base.b().clone())?;
            let verdict = sha1_order(&shifted, 3)?;
            if verdict.order() == reference.order()
                && verdict.reason() == reference.reason()
                && report_key(&verdict) == report_key(reference)
            {
                shift_ok += 1;
            } else {
                details.push(Detail {
                    check: format!("verdict drift on {label} with h = {h}"),
                    expected: format!("order {}", reference.order()),
                    computed: format!("order {}", verdict.order()),
                    pass: false,
                });
            }

            // Same invariance on the b-side: rebuild the second layer from a
            // shifted representative and rerun every decomposition group.
            let torsion = reference.torsion();
            let [first, second] = match torsion.classes() {
                [first, second] => [first, second],
                _ => {
                    // Below rank 2 there are no reports to reproduce; the
                    // class itself must still be stable.
                    let shifted_b = ArtinSchreierClass::reduce(&(base.b() + &wiggle))?;
                    let original_b = ArtinSchreierClass::reduce(base.b())?;
                    reports_ok += usize::from(
                        shifted_b.same_class(&original_b)?
                            && shifted_b.ramified_places() == original_b.ramified_places(),
                    );
                    continue;
                }
            };
            let shifted_second =
                ArtinSchreierClass::reduce(&(second.representative() + &wiggle))?;
            let mut all_match = shifted_second.same_class(second)?
                && shifted_second.ramified_places() == second.ramified_places();
            for report in reference.decomposition() {
                let rerun = decomposition_group(report.place(), first, &shifted_second)?;
                all_match &= rerun.group_order() == report.group_order()
                    && rerun.verdicts() == report.verdicts();
            }
            reports_ok += usize::from(all_match);
        }
        expect_eq(details, &format!("verdicts unchanged under a + h^2 + h ({trials} shifts)"), trials, shift_ok);
        expect_eq(
            details,
            &format!("reports reproduced from shifted b-representatives ({trials} shifts)"),
            trials,
            reports_ok,
        );
        Ok(())
    })
}

fn report_key(v: &Sha1Verdict) -> Vec<(String, u32)> {
    v.decomposition()
        .iter()
        .map(|r| (r.place().to_string(), r.group_order()))
        .collect()
}

fn random_poly(rng: &mut ChaCha8Rng, field: BinaryField, max_degree: usize) -> Poly {
    let coeffs = (0..=max_degree)
        .map(|_| field.element(rng.gen_range(0..field.order()) as u32))
        .collect();
    Poly::from_coeffs(field, coeffs)
}

fn random_ratfunc(rng: &mut ChaCha8Rng, num_degree: usize, den_degree: usize) -> RatFunc {
    let num = random_poly(rng, f2(), num_degree);
    let den = loop {
        let den = random_poly(rng, f2(), den_degree);
        if !den.is_zero() {
            break den;
        }
    };
    RatFunc::new(num, den).expect("denominator is nonzero")
}

fn random_constant_curve(
    rng: &mut ChaCha8Rng,
    max_degree: usize,
) -> (BinaryField, Curve<FieldElement>) {
    let field = BinaryField::new(rng.gen_range(1..=max_degree)).expect("supported degree");
    let a = field.element(rng.gen_range(0..field.order()) as u32);
    let b = loop {
        let b = field.element(rng.gen_range(0..field.order()) as u32);
        if !b.is_zero() {
            break b;
        }
    };
    (field, Curve::new(a, b).expect("b is nonzero"))
}

/// A uniformly random affine point: sample abscissae until the fibre
/// equation `s² + s = x + a + b/x²` (or `y² = b` at `x = 0`) is solvable.
fn random_affine_point(
    rng: &mut ChaCha8Rng,
    field: BinaryField,
    curve: &Curve<FieldElement>,
) -> Point<FieldElement> {
    loop {
        let x = field.element(rng.gen_range(0..field.order()) as u32);
        if x.is_zero() {
            return Point::affine(field.zero(), curve.b().sqrt());
        }
        let c = x + *curve.a() + *curve.b() * (x * x).inverse().expect("x is nonzero");
        if let Some(s) = c.artin_schreier_root() {
            let y = if rng.gen() { x * s } else { x * s + x };
            return Point::affine(x, y);
        }
    }
}

/// A random series with the requested precision, valuation ≥ 0, and (when
/// `solvable` is set) a constant coefficient of absolute trace zero, which
/// makes `w² + w = c` solvable by Hensel lifting.
fn random_integral_series(
    rng: &mut ChaCha8Rng,
    lf: &LocalField,
    precision: i64,
    solvable: bool,
) -> LaurentSeries {
    let residue = lf.residue_field();
    let mut series = lf.zero(precision);
    for idx in 0..precision {
        let mut c = residue.element(rng.gen_range(0..residue.order()) as u32);
        if solvable && idx == 0 {
            while c.trace() != 0 {
                c = residue.element(rng.gen_range(0..residue.order()) as u32);
            }
        }
        series = series.add(&LaurentSeries::exact_monomial(residue, c, idx));
    }
    series
}

/// A random point of the localized curve with unit abscissa, built from the
/// fibre equation alone. `None` means every draw hit an inert fibre, which
/// is structural at places whose residue field leaves no abscissae to vary.
fn random_local_point(
    rng: &mut ChaCha8Rng,
    lc: &LocalCurve,
) -> Result<Option<Point<LaurentSeries>>> {
    let residue = lc.field().residue_field();
    let precision = lc.precision();
    for _ in 0..24 {
        let mut x = lc.field().zero(precision);
        for idx in 0..12 {
            let mut c = residue.element(rng.gen_range(0..residue.order()) as u32);
            if idx == 0 {
                while c.is_zero() {
                    c = residue.element(rng.gen_range(0..residue.order()) as u32);
                }
            }
            x = x.add(&LaurentSeries::exact_monomial(residue, c, idx));
        }
        let rhs = x
            .add(lc.curve().a())
            .add(&lc.curve().b().div(&x.square()).context("x is a unit")?);
        match rhs.artin_schreier_solve() {
            Ok(s) => return Ok(Some(Point::affine(x.clone(), x.mul(&s)))),
            Err(_) => continue,
        }
    }
    Ok(None)
}
