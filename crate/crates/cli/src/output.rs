use chorded_spectra_core::cycles::CycleWitness;
use chorded_spectra_core::lab::{ClaimValue, ExtremalReport, VerdictReport};
use serde_json::{json, Map, Value};

/// Rounds to 12 significant digits so printed floats do not depend on the
/// last bits of an iteration.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

pub fn real(x: f64) -> Value {
    json!(round12(x))
}

pub fn claim_value(v: &ClaimValue) -> Value {
    match v {
        ClaimValue::Bool(b) => json!(b),
        ClaimValue::Int(i) => json!(i),
        ClaimValue::Real(x) => real(*x),
        ClaimValue::Text(s) => json!(s),
        ClaimValue::List(items) => Value::Array(items.iter().map(claim_value).collect()),
    }
}

pub fn verdict(v: &VerdictReport) -> Value {
    let map = |m: &std::collections::BTreeMap<String, ClaimValue>| -> Value {
        Value::Object(
            m.iter()
                .map(|(k, v)| (k.clone(), claim_value(v)))
                .collect::<Map<_, _>>(),
        )
    };
    json!({
        "claim_id": v.claim_id,
        "expected": map(&v.expected),
        "computed": map(&v.computed),
        "pass": v.pass,
        "rule": v.rule,
    })
}

pub fn extremal(r: &ExtremalReport) -> Value {
    json!({
        "m": r.m,
        "class": r.class_name,
        "graph_count": r.graph_count,
        "max_rho": real(r.max_rho),
        "argmax": r.argmax,
        "exact_ties": r.exact_ties,
    })
}

pub fn witness(w: &CycleWitness) -> Value {
    json!({
        "cycle": w.cycle,
        "chords": w.chords.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

fn tsv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => items.iter().map(tsv_cell).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// Flattens a JSON object into sorted `key<TAB>value` lines; nested objects
/// use dotted keys, arrays are comma-joined.
pub fn to_tsv(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<String>) {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, x, out);
                }
            }
            other => out.push(format!("{prefix}\t{}", tsv_cell(other))),
        }
    }
    let mut lines = Vec::new();
    walk("", v, &mut lines);
    let mut s = lines.join("\n");
    s.push('\n');
    s
}

/// One regression row: `m class count max_rho argmax…`.
pub fn extremal_tsv_row(r: &ExtremalReport) -> String {
    let mut cells = vec![
        r.m.to_string(),
        r.class_name.clone(),
        r.graph_count.to_string(),
        round12(r.max_rho).to_string(),
    ];
    cells.extend(r.argmax.iter().cloned());
    cells.join("\t")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round12(3.0000000000000004), 3.0);
        assert_eq!(round12(2.815571577260131), 2.81557157726);
        assert_eq!(real(10f64.sqrt()).to_string(), "3.16227766017");
    }

    #[test]
    fn tsv_flattening() {
        let v = json!({"b": {"x": 1, "y": [1, 2]}, "a": "s", "c": null});
        assert_eq!(to_tsv(&v), "a\ts\nb.x\t1\nb.y\t1,2\nc\tnone\n");
    }
}
