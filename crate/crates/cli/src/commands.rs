use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Map, Value};

use blocktilt_core::charring::{branch_verma, verma_character, CharacterSeries};
use blocktilt_core::kl::{kl_polynomial, parse_word, KlCache};
use blocktilt_core::mult::{
    block_equivalence_hint, classify_weight, tilting_character, translation_check,
    verma_in_tilting, verma_in_tilting_at,
};
use blocktilt_core::rational::parse_rational;
use blocktilt_core::weyl::{
    facet_signature, format_word, integral_subsystem, is_dot_regular, limit_descriptor,
    same_block, CoxeterDescriptor, Sign,
};
use blocktilt_core::{Error, LieType, Weight};

use crate::render;

pub enum Failure {
    Core(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn kind(&self) -> &'static str {
        match self {
            Failure::Core(e) => e.name(),
            Failure::Verify(_) => "VerificationFailed",
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Verify(m) => m.clone(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse(_)) => 2,
            Failure::Core(e) if e.is_io() => 4,
            _ => 3,
        }
    }
}

pub struct Output {
    pub text: String,
    pub json: Map<String, Value>,
}

type Res = Result<Output, Failure>;

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("command bodies are objects"),
    }
}

fn parse_type(s: &str) -> Result<LieType, Error> {
    s.parse()
}

/// `"3,1/2,0,-2"`; positions are 1-based and the tail is zero.
pub fn parse_weight(ty: LieType, s: &str) -> Result<Weight, Error> {
    let values = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| match e {
            Error::Parse(why) => Error::Parse(format!("weight {s:?}: {why}")),
            other => other,
        })?;
    Ok(Weight::from_slice(ty, &values))
}

fn open_cache(dir: Option<&Path>) -> Result<KlCache, Error> {
    match dir {
        Some(d) => KlCache::open(d),
        None => Ok(KlCache::in_memory()),
    }
}

fn sign_summary(lambda: &Weight, level: usize) -> Result<(String, Value), Error> {
    let sig = facet_signature(lambda, level)?;
    let json = json!({
        "level": level,
        "pos": sig.count(Sign::Pos),
        "zero": sig.count(Sign::Zero),
        "neg": sig.count(Sign::Neg),
    });
    Ok((sig.to_string(), json))
}

pub fn classify(ty: &str, weight: &str, level: Option<usize>) -> Res {
    let ty = parse_type(ty)?;
    let lambda = parse_weight(ty, weight)?;
    let level = level.unwrap_or(lambda.support().max(ty.min_level()) + 1);
    let class = classify_weight(&lambda, level)?;
    let sub = integral_subsystem(&lambda, level)?;
    let limit = limit_descriptor(&lambda);
    let (facet_text, facet_json) = sign_summary(&lambda, level)?;
    let regular = is_dot_regular(&lambda);
    let mut text = String::new();
    writeln!(text, "weight: {} (type {ty})", lambda.positional(lambda.support())).unwrap();
    writeln!(text, "integral: {}", class.integral).unwrap();
    writeln!(text, "dominant_integral: {}", class.dominant_integral).unwrap();
    writeln!(text, "nonintegral: {}", class.nonintegral).unwrap();
    writeln!(text, "almost_nonintegral: {}", class.almost_nonintegral).unwrap();
    writeln!(text, "restricted: {}", class.restricted).unwrap();
    writeln!(text, "dot_regular: {regular}").unwrap();
    writeln!(text, "integral_descriptor: {} (level {level})", sub.descriptor).unwrap();
    writeln!(text, "limit_descriptor: {limit}").unwrap();
    writeln!(text, "facet: {facet_text}").unwrap();
    let json = json!({
        "type": ty.to_string(),
        "weight": render::weight(&lambda, lambda.support()),
        "level": level,
        "flags": {
            "integral": class.integral,
            "dominant_integral": class.dominant_integral,
            "nonintegral": class.nonintegral,
            "almost_nonintegral": class.almost_nonintegral,
            "restricted": class.restricted,
        },
        "dot_regular": regular,
        "integral_descriptor": sub.descriptor.to_string(),
        "integral_positive_roots": sub.positive.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "limit_descriptor": limit.to_string(),
        "facet": facet_json,
    });
    Ok(Output {
        text,
        json: object(json),
    })
}

pub fn tilting_mult(ty: &str, lambda: &str, mu: &str, verify: bool, cache_dir: Option<&Path>) -> Res {
    let ty = parse_type(ty)?;
    let lambda = parse_weight(ty, lambda)?;
    let mu = parse_weight(ty, mu)?;
    let mut cache = open_cache(cache_dir)?;
    let r = verma_in_tilting(&lambda, &mu, &mut cache)?;
    let n = r.stabilization_level;
    let mut verified = Vec::new();
    if verify {
        for level in [n + 1, n + 2] {
            let again = verma_in_tilting_at(&lambda, &mu, level, &mut cache)?;
            if again.value != r.value {
                return Err(Failure::Verify(format!(
                    "value {} at level {n} but {} at level {level}",
                    r.value, again.value
                )));
            }
            verified.push(level);
        }
    }
    cache.save()?;
    let len = lambda.support().max(mu.support()).max(r.witness.xi.support());
    let mut text = String::new();
    writeln!(text, "{{D(lambda):Delta(mu)}} = {}", r.value).unwrap();
    writeln!(text, "{{D(lambda):nabla(mu)}} = {}", r.value).unwrap();
    writeln!(text, "stabilization_level: {n}").unwrap();
    writeln!(text, "same_block: {}", r.diagnostics.same_block).unwrap();
    writeln!(text, "regular: {}", r.diagnostics.regular).unwrap();
    writeln!(text, "integral_descriptor: {}", r.diagnostics.descriptor).unwrap();
    writeln!(text, "xi: {}", r.witness.xi.positional(len)).unwrap();
    writeln!(text, "x_word: {}", format_word(&r.witness.x_word)).unwrap();
    writeln!(text, "y_word: {}", format_word(&r.witness.y_word)).unwrap();
    if verify {
        let levels: Vec<String> = verified.iter().map(|l| l.to_string()).collect();
        writeln!(text, "verified_levels: {}", levels.join(",")).unwrap();
    }
    let json = json!({
        "type": ty.to_string(),
        "lambda": render::weight(&lambda, len),
        "mu": render::weight(&mu, len),
        "value": render::big(&r.value),
        "costandard_value": render::big(&r.value),
        "stabilization_level": n,
        "block_diagnostics": {
            "same_block": r.diagnostics.same_block,
            "regular": r.diagnostics.regular,
            "integral_descriptor": r.diagnostics.descriptor.to_string(),
        },
        "witness": {
            "xi": render::weight(&r.witness.xi, len),
            "x_word": render::word(&r.witness.x_word),
            "y_word": render::word(&r.witness.y_word),
        },
        "verified_levels": verified,
    });
    Ok(Output {
        text,
        json: object(json),
    })
}

fn series_output(ch: &CharacterSeries, kind: &str) -> Output {
    let len = ch.level();
    let mut text = format!(
        "# {kind} type {} level {} depth {}\n",
        ch.lie_type(),
        ch.level(),
        ch.depth()
    );
    text.push_str(&ch.to_string());
    let terms: Vec<Value> = ch
        .terms()
        .iter()
        .map(|(w, c)| json!({ "weight": render::weight(w, len), "coefficient": render::big(c) }))
        .collect();
    let json = json!({
        "kind": kind,
        "type": ch.lie_type().to_string(),
        "anchor": render::weight(ch.anchor(), len),
        "level": ch.level(),
        "depth": ch.depth(),
        "terms": terms,
    });
    Output {
        text,
        json: object(json),
    }
}

pub fn character(
    ty: &str,
    weight: &str,
    tilting: bool,
    depth: usize,
    level: Option<usize>,
    cache_dir: Option<&Path>,
) -> Res {
    let ty = parse_type(ty)?;
    let lambda = parse_weight(ty, weight)?;
    let level = level.unwrap_or((lambda.support() + depth + 1).max(ty.min_level()));
    if tilting {
        let mut cache = open_cache(cache_dir)?;
        let ch = tilting_character(&lambda, depth, level, &mut cache)?;
        cache.save()?;
        Ok(series_output(&ch, "tilting"))
    } else {
        let ch = verma_character(&lambda, depth, level)?;
        Ok(series_output(&ch, "verma"))
    }
}

pub fn kl(descriptor: &str, x: &str, y: &str, cache_dir: Option<&Path>) -> Res {
    let desc: CoxeterDescriptor = descriptor.parse()?;
    let (xw, yw) = (parse_word(x)?, parse_word(y)?);
    let mut cache = open_cache(cache_dir)?;
    let p = kl_polynomial(&xw, &yw, &desc, &mut cache)?;
    cache.save()?;
    let text = format!("{p}\n");
    let json = json!({
        "descriptor": desc.to_string(),
        "x_word": render::word(&xw),
        "y_word": render::word(&yw),
        "coeffs": p.coeffs().iter().map(render::big).collect::<Vec<_>>(),
        "polynomial": p.to_string(),
        "at_one": render::big(&p.at_one()),
        "bruhat_leq": !p.is_zero(),
    });
    Ok(Output {
        text,
        json: object(json),
    })
}

pub fn translate_check(ty: &str, lambda: &str, mu: &str) -> Res {
    let ty = parse_type(ty)?;
    let lambda = parse_weight(ty, lambda)?;
    let mu = parse_weight(ty, mu)?;
    let v = translation_check(&lambda, &mu);
    let mut text = format!("admissible: {}\n", v.admissible);
    for c in &v.reasons {
        let mark = if c.passed { "passed" } else { "failed" };
        writeln!(text, "{}: {mark} ({})", c.name, c.detail).unwrap();
    }
    let nu_len = v.dominant_rep.as_ref().map_or(0, |w| w.support());
    if let Some(nu) = &v.dominant_rep {
        writeln!(text, "dominant_rep: {}", nu.positional(nu_len)).unwrap();
    }
    let json = json!({
        "type": ty.to_string(),
        "admissible": v.admissible,
        "reasons": v.reasons.iter().map(|c| json!({
            "condition": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "dominant_rep": v.dominant_rep.as_ref().map(|w| render::weight(w, nu_len)),
    });
    Ok(Output {
        text,
        json: object(json),
    })
}

pub fn block(ty: &str, lambda: &str, mu: &str) -> Res {
    let ty = parse_type(ty)?;
    let lambda = parse_weight(ty, lambda)?;
    let mu = parse_weight(ty, mu)?;
    let same = same_block(&lambda, &mu)?;
    let (dl, dm) = (limit_descriptor(&lambda), limit_descriptor(&mu));
    let (rl, rm) = (is_dot_regular(&lambda), is_dot_regular(&mu));
    let hint = block_equivalence_hint(&lambda, &mu);
    let mut text = String::new();
    writeln!(text, "same_block: {same}").unwrap();
    writeln!(text, "lambda: descriptor {dl}, dot_regular {rl}").unwrap();
    writeln!(text, "mu: descriptor {dm}, dot_regular {rm}").unwrap();
    match &hint {
        Some(m) => writeln!(text, "equivalence_hint: {m}").unwrap(),
        None => writeln!(text, "equivalence_hint: none").unwrap(),
    }
    let json = json!({
        "type": ty.to_string(),
        "same_block": same,
        "lambda": { "descriptor": dl.to_string(), "dot_regular": rl },
        "mu": { "descriptor": dm.to_string(), "dot_regular": rm },
        "equivalence_hint": hint.as_ref().map(|m| json!({
            "descriptor": m.descriptor.to_string(),
            "stabilizers": [m.stabilizers.0.to_string(), m.stabilizers.1.to_string()],
            "stabilizers_match": m.stabilizers_match,
        })),
    });
    Ok(Output {
        text,
        json: object(json),
    })
}

pub fn branch(ty: &str, weight: &str, n: usize, depth: usize, level: Option<usize>) -> Res {
    let ty = parse_type(ty)?;
    let lambda = parse_weight(ty, weight)?;
    let ambient = level.unwrap_or(n.max(lambda.support() + depth + 1).max(ty.min_level()));
    let b = branch_verma(&lambda, n, depth, ambient)?;
    let mut text = format!("# branch type {ty} n {n} ambient {ambient} depth {depth}\n");
    text.push_str(&b.to_string());
    let terms: Vec<Value> = b
        .terms()
        .iter()
        .map(|(w, c)| json!({ "nu": render::weight(w, ambient), "multiplicity": render::big(c) }))
        .collect();
    let json = json!({
        "type": ty.to_string(),
        "lambda": render::weight(&lambda, ambient),
        "n": n,
        "ambient_level": ambient,
        "depth": depth,
        "terms": terms,
    });
    Ok(Output {
        text,
        json: object(json),
    })
}
