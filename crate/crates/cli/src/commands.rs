use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use projquant::branching;
use projquant::casimir::{self, nonzero_labels};
use projquant::flatmodel::quantize::symbolic_quantization;
use projquant::flatmodel::{self, quantization_coefficients, CasimirOperator, WeightedSection};
use projquant::rational::{self, Rational};
use projquant::tensor::{littlewood_richardson, symbol_rep};
use projquant::{Decomposition, Error, IrrepLabel};

/// A domain error, reported as JSON with exit code 1.
pub enum Failure {
    Domain(Error),
    CheckFailed(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn to_json(&self) -> Value {
        match self {
            Failure::Domain(Error::ResonantWeight { delta, denominator }) => json!({
                "error": "resonant_weight",
                "delta": rat(delta),
                "denominator": denominator,
                "message": self.message(),
            }),
            Failure::Domain(e) => json!({ "error": "domain", "message": e.to_string() }),
            Failure::CheckFailed(v) => json!({ "error": "check_failed", "report": v }),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Domain(e) => e.to_string(),
            Failure::CheckFailed(_) => "check failed".into(),
        }
    }
}

type Outcome = Result<Value, Failure>;

fn rat(x: &Rational) -> Value {
    Value::String(rational::format(x))
}

fn label_json(l: &IrrepLabel) -> Value {
    Value::String(l.to_string())
}

fn decomposition_json(d: &Decomposition) -> Value {
    Value::Array(
        d.terms()
            .iter()
            .map(|(l, mult)| json!({ "label": label_json(l), "multiplicity": mult, "dimension": l.dimension() }))
            .collect(),
    )
}

pub fn eigenvalue(label: &IrrepLabel) -> Outcome {
    let p = casimir::eigenvalue(label);
    Ok(json!({
        "label": label_json(label),
        "c0": rat(&p.c0),
        "c1": rat(&p.c1),
        "c2": rat(&p.c2),
        "alpha": rat(&casimir::alpha(label)),
    }))
}

pub fn resonances(label: &IrrepLabel, base: Option<&Rational>) -> Outcome {
    let set = match base {
        Some(eps) => casimir::resonances_with_base(label, eps),
        None => casimir::resonances(label),
    };
    Ok(Value::Array(set.iter().map(rat).collect()))
}

pub fn branch(parent: &IrrepLabel) -> Outcome {
    let comps = branching::components(parent)?;
    Ok(json!({
        "parent": label_json(parent),
        "components": comps
            .iter()
            .map(|(q, c)| json!({
                "q": q.padded(parent.rank() - 1),
                "removed": q.norm(),
                "label": label_json(c),
                "dimension": c.dimension(),
            }))
            .collect::<Vec<_>>(),
    }))
}

pub fn decompose(v1: &IrrepLabel, v2: &IrrepLabel, k: u32, product: bool) -> Outcome {
    let d = if product { littlewood_richardson(v1, v2)? } else { symbol_rep(v1, v2, k)? };
    Ok(decomposition_json(&d))
}

/// The coefficients `c_l` as an array; with `symbolic`, an object that also
/// carries their dependence on the weight.
pub fn quantize(m: usize, k: u32, lambda: &Rational, mu: &Rational, symbolic: bool) -> Outcome {
    let c = quantization_coefficients(m, k, lambda, mu)?;
    let coefficients: Vec<Value> = c.coeffs().iter().map(rat).collect();
    if !symbolic {
        return Ok(Value::Array(coefficients));
    }
    let s = symbolic_quantization(m, k, lambda)?;
    Ok(json!({
        "m": m,
        "k": k,
        "lambda": rat(lambda),
        "mu": rat(mu),
        "delta": rat(&(mu - lambda)),
        "coefficients": coefficients,
        "symbolic_coefficients": s.coefficients.iter().map(|f| json!({
            "numerator": f.numerator().display_in("delta"),
            "denominator": f.denominator().display_in("delta"),
        })).collect::<Vec<_>>(),
        "determinant": s.determinant.display_in("delta"),
        "singular_weights": s.singular_weights().iter().map(rat).collect::<Vec<_>>(),
    }))
}

pub fn casimir_check(label: &IrrepLabel, trials: usize, seed: u64, max_degree: u32) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let op = CasimirOperator::new(label.rank());
    let alpha = casimir::alpha(label);
    let mut matches = 0;
    let mut observed = Vec::new();
    for _ in 0..trials {
        let s = WeightedSection::random(label, max_degree, &mut rng)?;
        let image = op.apply(&s);
        let ratio = image.ratio_to(&s);
        if ratio.as_ref() == Some(&alpha) {
            matches += 1;
        }
        observed.push(ratio.map_or(Value::Null, |r| rat(&r)));
    }
    let report = json!({
        "label": label_json(label),
        "alpha": rat(&alpha),
        "trials": trials,
        "seed": seed,
        "matches": matches,
        "observed": observed,
    });
    if matches == trials {
        Ok(report)
    } else {
        Err(Failure::CheckFailed(report))
    }
}

pub fn lift_plan(label: &IrrepLabel) -> Outcome {
    let delta = label.weight();
    let plan = flatmodel::lift_plan(label, delta)?;
    let rank = label.rank();
    Ok(json!({
        "label": label_json(label),
        "nodes": plan.nodes.iter().map(|n| json!({
            "q": n.q.padded(rank),
            "component": label_json(&n.component),
            "coefficient": n.coefficient.as_ref().map_or(Value::Null, rat),
        })).collect::<Vec<_>>(),
        "edges": plan.edges,
        "non_root_components": nonzero_labels(label).len(),
    }))
}
