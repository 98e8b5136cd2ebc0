//! Acceptance suite: one PASS/FAIL line per criterion, each run at its stated
//! tolerance (exact equality) and time budget.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use projquant::branching::{self, max_removal_embedding};
use projquant::casimir::{
    alpha, is_resonant, resonances, resonances_closed_form, resonances_from_eigenvalues,
    symmetric_power_resonances,
};
use projquant::diagrams::{partitions, IrrepLabel, YoungDiagram};
use projquant::error::Error;
use projquant::flatmodel::quantize::{random_samples, EquivarianceSystem};
use projquant::flatmodel::{
    quantization_coefficients, verify_equivariance, CasimirOperator, WeightedSection,
};
use projquant::linalg::SolveOutcome;
use projquant::rational::{frac, int, pow, Rational};
use projquant::tensor::littlewood_richardson;

type Outcome = Result<String, String>;

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// `len` pairwise distinct nonzero rationals.
fn random_point(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    while out.len() < len {
        let x = random_rational(rng);
        if !x.is_zero() && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn random_diagram(rng: &mut impl Rng, max_size: u32, max_depth: usize) -> YoungDiagram {
    let size = rng.gen_range(0..=max_size);
    partitions(size, max_depth).choose(rng).cloned().unwrap_or_else(YoungDiagram::empty)
}

fn random_label(rng: &mut impl Rng, max_size: u32, ranks: std::ops::RangeInclusive<usize>) -> IrrepLabel {
    let m = rng.gen_range(ranks);
    let d = random_diagram(rng, max_size, m - 1);
    IrrepLabel::new(d, m, rng.gen_range(-1..=1), random_rational(rng)).unwrap()
}

fn criterion_eigenvalue_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    for m in [2usize, 3] {
        let casimir = CasimirOperator::new(m);
        let mut diagrams = vec![YoungDiagram::empty(), YoungDiagram::row(1), YoungDiagram::row(2), YoungDiagram::row(3)];
        if m >= 3 {
            diagrams.push(YoungDiagram::column(2));
        }
        for d in &diagrams {
            for n in [0, 1] {
                for delta in [int(0), frac(1, 2), int(-1), frac(2, 3)] {
                    let label = IrrepLabel::new(d.clone(), m, n, delta).map_err(|e| e.to_string())?;
                    let expected = alpha(&label);
                    for _ in 0..5 {
                        let s = WeightedSection::random(&label, 3, &mut rng).map_err(|e| e.to_string())?;
                        let image = casimir.apply(&s);
                        ensure(image == s.scale(&expected), || format!("{label}: Casimir is not {expected}·id"))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} random sections"))
}

fn canonical_labels(max_rank: usize, max_size: u32, twists: &[i64]) -> Vec<IrrepLabel> {
    let mut out = Vec::new();
    for m in 2..=max_rank {
        for size in 0..=max_size {
            for d in partitions(size, m - 1) {
                for &n in twists {
                    out.push(IrrepLabel::new(d.clone(), m, n, Rational::zero()).unwrap());
                }
            }
        }
    }
    out
}

fn criterion_closed_form() -> Outcome {
    let labels = canonical_labels(4, 5, &[-2, -1, 0, 1, 2]);
    for l in &labels {
        let (closed, generic) = (resonances_closed_form(l), resonances_from_eigenvalues(l));
        ensure(closed == generic, || format!("{l}: {closed:?} vs {generic:?}"))?;
    }
    Ok(format!("{} labels", labels.len()))
}

fn criterion_solver_resonances() -> Outcome {
    let mut systems = 0;
    for m in [2usize, 3, 4] {
        for k in 1..=4u32 {
            let expected: BTreeSet<Rational> =
                (1..=i64::from(k)).map(|q| frac(m as i64 + 2 * i64::from(k) - q, m as i64 + 1)).collect();
            let label = IrrepLabel::new(YoungDiagram::row(k), m, 0, Rational::zero()).unwrap();
            ensure(resonances(&label) == expected, || format!("m={m} k={k}: casimir set differs"))?;
            ensure(symmetric_power_resonances(m, k) == expected, || format!("m={m} k={k}: helper differs"))?;
            for lambda in [int(0), frac(1, 2), int(-2)] {
                let system = EquivarianceSystem::build(m, k, &lambda).map_err(|e| e.to_string())?;
                let found = system.symbolic().map_err(|e| e.to_string())?.singular_weights();
                ensure(found == expected, || format!("m={m} k={k} λ={lambda}: determinant roots {found:?}"))?;
                for r in &expected {
                    let outcome = system.solve_at(r);
                    ensure(!matches!(outcome, SolveOutcome::Unique(_)), || {
                        format!("m={m} k={k}: solver not singular at {r}")
                    })?;
                }
                systems += 1;
            }
        }
    }
    Ok(format!("{systems} symbolic systems"))
}

fn criterion_zero_not_resonant() -> Outcome {
    let labels = canonical_labels(5, 6, &[0, 1, 2, 3]);
    for l in &labels {
        ensure(!is_resonant(l, &Rational::zero()), || format!("{l}: 0 is resonant"))?;
    }
    Ok(format!("{} labels", labels.len()))
}

fn criterion_branching_character() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cases = 60;
    for _ in 0..cases {
        let parent = random_label(&mut rng, 6, 3..=5);
        let m = parent.rank() - 1;
        let point = random_point(&mut rng, m + 1);
        let (x, t) = (&point[..m], &point[m]);
        let lhs = parent.character(&point).map_err(|e| e.to_string())?;
        let mut rhs = Rational::zero();
        let mut dim = 0u64;
        for (q, c) in branching::components(&parent).map_err(|e| e.to_string())? {
            let power = parent.twist() + i64::from(q.norm());
            rhs += c.character(x).map_err(|e| e.to_string())? * pow(t, power);
            dim += c.dimension();
        }
        ensure(lhs == rhs, || format!("{parent}: character identity fails"))?;
        ensure(dim == parent.dimension(), || format!("{parent}: dimension {dim} vs {}", parent.dimension()))?;
    }
    Ok(format!("{cases} random parents"))
}

fn criterion_lr_character() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let pairs = 35;
    let points = 10;
    for _ in 0..pairs {
        let m = rng.gen_range(2..=4);
        let a = IrrepLabel::new(random_diagram(&mut rng, 5, m - 1), m, rng.gen_range(-1..=1), random_rational(&mut rng)).unwrap();
        let b = IrrepLabel::new(random_diagram(&mut rng, 5, m - 1), m, rng.gen_range(-1..=1), random_rational(&mut rng)).unwrap();
        let dec = littlewood_richardson(&a, &b).map_err(|e| e.to_string())?;
        ensure(dec.total_dimension() == a.dimension() * b.dimension(), || format!("{a} ⊗ {b}: dimension"))?;
        for _ in 0..points {
            let x = random_point(&mut rng, m);
            let lhs = a.character(&x).unwrap() * b.character(&x).unwrap();
            ensure(lhs == dec.character(&x).unwrap(), || format!("{a} ⊗ {b}: character mismatch"))?;
        }
    }
    Ok(format!("{pairs} pairs × {points} points"))
}

fn criterion_ete() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cases = 25;
    for _ in 0..cases {
        let l = random_label(&mut rng, 6, 2..=5);
        let e = l.ete();
        let expected = l.diagram().with_first_row_doubled();
        ensure(e.diagram() == &expected, || format!("{l}: ete diagram {}", e.diagram()))?;
        let q = max_removal_embedding(&l);
        let c = branching::component(&e, &q).map_err(|err| err.to_string())?;
        ensure(c.diagram() == l.diagram(), || format!("{l}: max removal gives {}", c.diagram()))?;
    }
    Ok(format!("{cases} random labels"))
}

fn criterion_equivariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let m = 2;
    let lambda = frac(1, 2);
    let mut cases = 0;
    let mut skipped = Vec::new();
    for k in 0..=3u32 {
        for delta in [int(0), frac(1, 3), int(2)] {
            let mu = &lambda + &delta;
            if symmetric_power_resonances(m, k).contains(&delta) {
                let err = quantization_coefficients(m, k, &lambda, &mu);
                ensure(matches!(err, Err(Error::ResonantWeight { .. })), || format!("k={k} δ={delta}: expected resonance"))?;
                skipped.push(format!("k={k},δ={delta}"));
                continue;
            }
            let c = quantization_coefficients(m, k, &lambda, &mu).map_err(|e| format!("k={k} δ={delta}: {e}"))?;
            ensure(c.coeffs()[0].is_one(), || "c_0 ≠ 1".into())?;
            let (symbols, functions) = random_samples(m, k, &delta, 5, 3, &mut rng).map_err(|e| e.to_string())?;
            let report = verify_equivariance(&c, &lambda, &symbols, &functions).map_err(|e| e.to_string())?;
            ensure(report.len() == 3, || "missing grades".into())?;
            for r in &report {
                ensure(r.vanishes(), || format!("k={k} δ={delta}: {} residual nonzero", r.grade.name()))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases, resonant (asserted ResonantWeight): {}", skipped.join(" ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 eigenvalue oracle", 60, criterion_eigenvalue_oracle),
        ("2 resonance closed form vs generic", 10, criterion_closed_form),
        ("3 resonance vs solver", 30, criterion_solver_resonances),
        ("4 zero is not resonant", 5, criterion_zero_not_resonant),
        ("5 branching character identity", 30, criterion_branching_character),
        ("6 Littlewood-Richardson character oracle", 60, criterion_lr_character),
        ("7 ete structure", 10, criterion_ete),
        ("8 equivariance of constructed quantization", 60, criterion_equivariance),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) if !over => println!("PASS  {name}: {detail} ({secs:.2}s, budget {budget}s)"),
            Ok(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}; over time budget ({secs:.2}s > {budget}s)");
            }
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
