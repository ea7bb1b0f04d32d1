//! Request dispatch for the command-line front end. A request is one JSON object naming a
//! verb; the response is a JSON document plus an exit status.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cocycles::{
    c2_coeffs, check_cocycle, extract_gamma, fit_ansatz, gamma1, gamma2_exact, gamma_bar, gelfand_fuchs,
    solve_sys, ansatz_samples, BilinearMap, Gamma1, GammaAnsatz, Scaled,
};
use crate::error::Error;
use crate::json::{
    parse_density_weight, parse_rational_field, parse_weight, tensor_entries, DensityJson, FieldJson, OperatorJson,
    SymbolJson,
};
use crate::onedim::{check_1d_cocycles, check_bernoulli_structure, extract_correction_1d, t_display, transvectant, Density1D};
use crate::projsym::{check_equivariance, quantization_map_at, symbol_map_at};
use crate::quantize_apps::{geodesic_operator, intertwiner_l2, star_product};
use crate::report::Report;
use crate::ring::fiber::{FiberKind, FiberPoly};
use crate::ring::parse_coeff;
use crate::sample::{self, DEFAULT_SEED};
use crate::suite;

pub const VERBS: [&str; 13] = [
    "symbolize",
    "quantize",
    "check-equivariance",
    "star",
    "intertwine",
    "geodesic",
    "cocycle",
    "solve-sys",
    "extract-gamma",
    "transvectant",
    "extract-t",
    "check-1d",
    "suite",
];

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub command: String,
    pub n: Option<usize>,
    pub lambda: Option<String>,
    pub payload: Option<Value>,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub j: Option<usize>,
    pub m: Option<usize>,
    pub cocycle: Option<bool>,
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Usage,
    Precondition,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Response {
    pub body: Value,
    /// LaTeX of the principal result, when it is an operator or a symbol.
    pub latex: Option<String>,
    pub status: i32,
}

impl Response {
    fn ok(body: Value) -> Self {
        Response { body, latex: None, status: 0 }
    }

    fn with_latex(mut self, latex: String) -> Self {
        self.latex = Some(latex);
        self
    }

    fn report(command: &str, r: &Report) -> Self {
        let status = if r.passed { 0 } else { 1 };
        Response { body: json!({"command": command, "ok": true, "result": r}), latex: None, status }
    }

    pub fn error(kind: ErrorKind, message: impl Into<String>) -> Self {
        let status = match kind {
            ErrorKind::Usage => 2,
            ErrorKind::Precondition => 3,
        };
        Response { body: json!({"ok": false, "error": {"kind": kind, "message": message.into()}}), latex: None, status }
    }
}

/// Deterministic LaTeX for operators and symbols.
pub fn emit_latex<K: FiberKind>(v: &FiberPoly<K>) -> String {
    v.to_latex()
}

fn usage(msg: impl Into<String>) -> Response {
    Response::error(ErrorKind::Usage, msg)
}

impl From<Error> for Response {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::DimensionMismatch { .. } | Error::LambdaDependent => {
                Response::error(ErrorKind::Usage, e.to_string())
            }
            _ => Response::error(ErrorKind::Precondition, e.to_string()),
        }
    }
}

type Outcome = std::result::Result<Response, Response>;

fn payload<T: for<'de> Deserialize<'de>>(req: &Request) -> std::result::Result<T, Response> {
    let v = req.payload.clone().ok_or_else(|| usage(format!("{} needs a payload", req.command)))?;
    serde_json::from_value(v).map_err(|e| usage(format!("payload: {e}")))
}

fn field<T: for<'de> Deserialize<'de>>(v: &Value, name: &str) -> std::result::Result<T, Response> {
    let x = v.get(name).cloned().ok_or_else(|| usage(format!("payload misses {name:?}")))?;
    serde_json::from_value(x).map_err(|e| usage(format!("payload.{name}: {e}")))
}

fn need(v: Option<usize>, name: &str) -> std::result::Result<usize, Response> {
    v.ok_or_else(|| usage(format!("missing {name:?}")))
}

fn dim(req: &Request) -> std::result::Result<usize, Response> {
    match req.n {
        Some(0) => Err(usage("n must be at least 1")),
        Some(n) => Ok(n),
        None => Err(usage("missing \"n\"")),
    }
}

/// Parse and run one JSON request.
pub fn run_json(text: &str) -> Response {
    match serde_json::from_str::<Request>(text) {
        Ok(req) => run(&req),
        Err(e) => usage(format!("request: {e}")),
    }
}

pub fn run(req: &Request) -> Response {
    if !VERBS.contains(&req.command.as_str()) {
        return usage(format!("unknown command {:?}; expected one of {}", req.command, VERBS.join(", ")));
    }
    dispatch(req).unwrap_or_else(|e| e)
}

fn dispatch(req: &Request) -> Outcome {
    let cmd = req.command.as_str();
    let seed = req.seed.unwrap_or(DEFAULT_SEED);
    let wrap = |result: Value| json!({"command": cmd, "ok": true, "result": result});
    match cmd {
        "symbolize" => {
            let n = dim(req)?;
            let w = parse_weight(req.lambda.as_deref())?;
            let a = payload::<OperatorJson>(req)?.to_operator(n)?;
            let s = symbol_map_at(&a, &w);
            Ok(Response::ok(wrap(json!({"n": n, "symbol": SymbolJson::from_symbol(&s)}))).with_latex(emit_latex(&s)))
        }
        "quantize" => {
            let n = dim(req)?;
            let w = parse_weight(req.lambda.as_deref())?;
            let p = payload::<SymbolJson>(req)?.to_symbol(n)?;
            let a = quantization_map_at(&p, &w);
            Ok(Response::ok(wrap(json!({"n": n, "operator": OperatorJson::from_operator(&a)}))).with_latex(emit_latex(&a)))
        }
        "check-equivariance" => {
            let n = dim(req)?;
            let v = req.payload.clone().unwrap_or(json!({}));
            let order = v.get("max_order").and_then(Value::as_u64).unwrap_or(2) as usize;
            let deg = v.get("max_coeff_degree").and_then(Value::as_u64).unwrap_or(2) as usize;
            Ok(Response::report(cmd, &check_equivariance(n, order, deg)))
        }
        "star" => {
            let n = dim(req)?;
            let w = parse_weight(req.lambda.as_deref())?;
            let v: Value = payload(req)?;
            let f = field::<SymbolJson>(&v, "f")?.to_symbol(n)?;
            let g = field::<SymbolJson>(&v, "g")?.to_symbol(n)?;
            let prod = star_product(&f, &g, &w)?;
            let grades: Vec<SymbolJson> = prod.terms().iter().map(SymbolJson::from_symbol).collect();
            Ok(Response::ok(wrap(json!({"n": n, "grades": grades}))))
        }
        "intertwine" => {
            let n = dim(req)?;
            let v: Value = payload(req)?;
            let a = field::<OperatorJson>(&v, "operator")?.to_operator(n)?;
            let from = parse_rational_field(&field::<String>(&v, "from")?)?;
            let to = parse_rational_field(&field::<String>(&v, "to")?)?;
            let out = intertwiner_l2(&a, &from, &to)?;
            Ok(Response::ok(wrap(json!({"n": n, "operator": OperatorJson::from_operator(&out)})))
                .with_latex(emit_latex(&out)))
        }
        "geodesic" => {
            let n = dim(req)?;
            let g = payload::<SymbolJson>(req)?.to_symbol(n)?;
            let a = geodesic_operator(&g)?;
            Ok(Response::ok(wrap(json!({"n": n, "operator": OperatorJson::from_operator(&a)}))).with_latex(emit_latex(&a)))
        }
        "cocycle" => cocycle(req, seed),
        "solve-sys" => {
            let (k, p, n) = (need(req.k, "k")?, need(req.p, "p")?, dim(req)?);
            let s = solve_sys(k, p, n, req.cocycle.unwrap_or(false))?;
            let basis: Vec<Value> = s.basis.iter().map(named_json).collect();
            Ok(Response::ok(wrap(json!({"dimension": s.dimension, "basis": basis}))))
        }
        "extract-gamma" => {
            let (k, p, n) = (need(req.k, "k")?, need(req.p, "p")?, dim(req)?);
            let ex = extract_gamma(p, k, n)?;
            let g = fit_ansatz(&ex, &ansatz_samples(n, k, p, p + 1, seed))?;
            Ok(Response::ok(wrap(json!({"k": k, "p": p, "n": n, "coefficients": named_json(&g)}))))
        }
        "transvectant" => {
            let v: Value = payload(req)?;
            let m = need(req.m.or_else(|| v.get("m").and_then(Value::as_u64).map(|m| m as usize)), "m")?;
            let phi = density(&field::<DensityJson>(&v, "phi")?)?;
            let psi = density(&field::<DensityJson>(&v, "psi")?)?;
            let out = transvectant(&phi, &psi, m);
            Ok(Response::ok(wrap(json!({"coeff": out.coeff().to_string(), "weight": out.weight().to_string()}))))
        }
        "extract-t" => {
            let (k, j) = (need(req.k, "k")?, need(req.j, "j")?);
            let c = extract_correction_1d(k, j)?;
            Ok(Response::ok(wrap(json!({
                "k": k,
                "j": j,
                "coefficients": c.coeffs.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "t": c.t.as_ref().map(|t| t.to_string()),
                "display": t_display(k, j).map(|t| t.to_string()),
            }))))
        }
        "check-1d" => {
            let k_max = req.k.unwrap_or(3);
            let mut r = check_1d_cocycles(k_max)?;
            r.absorb(check_bernoulli_structure(k_max.max(2), k_max.max(2))?);
            Ok(Response::report(cmd, &r))
        }
        "suite" => {
            let outcomes = suite::run_all();
            let passed = outcomes.iter().all(|o| o.report.passed);
            let lines: Vec<String> = outcomes.iter().map(|o| o.line()).collect();
            let body = json!({"command": cmd, "ok": true, "result": {"passed": passed, "summary": lines, "criteria": outcomes}});
            Ok(Response { body, latex: None, status: if passed { 0 } else { 1 } })
        }
        _ => unreachable!("verb list checked in run"),
    }
}

fn density(d: &DensityJson) -> std::result::Result<Density1D, Response> {
    Ok(Density1D::new(parse_coeff(&d.coeff, 1)?, parse_density_weight(&d.weight)?)?)
}

fn named_json(g: &GammaAnsatz) -> Value {
    let m: serde_json::Map<String, Value> = g.named().into_iter().map(|(k, v)| (k, Value::String(v.to_string()))).collect();
    Value::Object(m)
}

/// Evaluate a named cocycle on a field (and symbol), or with `"check": true` test the cocycle
/// identity on seeded samples.
fn cocycle(req: &Request, seed: u64) -> Outcome {
    let n = dim(req)?;
    let v: Value = payload(req)?;
    let name: String = field(&v, "name")?;
    let check = v.get("check").and_then(Value::as_bool).unwrap_or(false);
    let wrap = |result: Value| json!({"command": "cocycle", "ok": true, "result": result});
    if check {
        let k = need(req.k, "k")?;
        let map: Box<dyn BilinearMap> = match name.as_str() {
            "gamma1" => Box::new(Gamma1 { k, n }),
            "c2" => Box::new(c2_coeffs(k, n)?),
            "gamma2" => {
                let (pre, g) = gamma2_exact(k, n)?;
                Box::new(Scaled { factor: pre, inner: g })
            }
            other => return Err(usage(format!("no cocycle check for {other:?}"))),
        };
        let mut rng = sample::rng(seed);
        let pairs: Vec<_> =
            (0..3).map(|_| (sample::random_field(&mut rng, n, 3, 2), sample::random_field(&mut rng, n, 3, 2))).collect();
        let syms: Vec<_> = (0..2).map(|_| sample::random_symbol(&mut rng, n, k, 2, 2)).collect();
        return Ok(Response::report("cocycle", &check_cocycle(map.as_ref(), &pairs, &syms)?));
    }
    let x = field::<FieldJson>(&v, "field")?.to_field(n)?;
    match name.as_str() {
        "gamma_bar" => Ok(Response::ok(wrap(json!({"tensor": tensor_entries(&gamma_bar(&x))})))),
        "gelfand_fuchs" => Ok(Response::ok(wrap(json!({"coeff": gelfand_fuchs(&x)?.to_string()})))),
        "gamma1" | "c2" | "gamma2" => {
            let a = field::<SymbolJson>(&v, "symbol")?.to_symbol(n)?;
            let k = a.degree().ok_or_else(|| usage("symbol must be nonzero"))?;
            let out = match name.as_str() {
                "gamma1" => gamma1(&x, &a)?,
                "c2" => c2_coeffs(k, n)?.eval(&x, &a)?,
                _ => {
                    let (pre, g) = gamma2_exact(k, n)?;
                    g.eval(&x, &a)?.scale(&pre)
                }
            };
            Ok(Response::ok(wrap(json!({"symbol": SymbolJson::from_symbol(&out)}))).with_latex(emit_latex(&out)))
        }
        other => Err(usage(format!("unknown cocycle {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_scalar, MultiIndex};
    use crate::operators::DiffOp;
    use crate::symbols::SymbolPoly;

    #[test]
    fn symbolize_request() {
        let r = run_json(r#"{"command":"symbolize","n":2,"lambda":"formal","payload":{"terms":[{"dx":[2,0],"coeff":"x1"}]}}"#);
        assert_eq!(r.status, 0);
        let terms = &r.body["result"]["symbol"]["terms"];
        assert_eq!(terms[0]["xi"], json!([1, 0]));
        assert_eq!(terms[0]["coeff"], json!("-6/5*l - 2/5"));
        assert_eq!(terms[1]["xi"], json!([2, 0]));
        assert_eq!(terms[1]["coeff"], json!("x1"));
    }

    #[test]
    fn solve_sys_request() {
        let r = run_json(r#"{"command":"solve-sys","k":3,"p":2,"n":2,"cocycle":false}"#);
        assert_eq!(r.status, 0);
        assert_eq!(r.body["result"]["dimension"], json!(2));
    }

    #[test]
    fn errors_are_structured() {
        let r = run_json(r#"{"command":"nope"}"#);
        assert_eq!((r.status, r.body["error"]["kind"].clone()), (2, json!("usage")));
        let r = run_json(r#"{"command":"solve-sys","k":1,"p":2,"n":2}"#);
        assert_eq!((r.status, r.body["error"]["kind"].clone()), (3, json!("precondition")));
        assert!(r.body["error"]["message"].as_str().unwrap().contains("p <= k"));
        let r = run_json(r#"{"command":"symbolize","n":2,"bogus":1}"#);
        assert_eq!(r.status, 2);
        let r = run_json(r#"{"command":"geodesic","n":2,"payload":{"terms":[{"xi":[1,0],"coeff":"1"}]}}"#);
        assert_eq!(r.status, 3);
    }

    #[test]
    fn latex_forms() {
        let d = DiffOp::monomial(2, MultiIndex::new(vec![2, 0]), crate::ring::CoeffPoly::one(2));
        assert_eq!(emit_latex(&d), "\\partial_1^2");
        let s = SymbolPoly::monomial(2, MultiIndex::new(vec![2, 0]), parse_coeff("x1", 2).unwrap());
        assert_eq!(emit_latex(&s), "x^1 \\xi_1^2");
        assert_eq!(parse_scalar("2l - 1").unwrap().to_latex(), "2\\lambda - 1");
    }

    #[test]
    fn output_is_deterministic() {
        let q = r#"{"command":"star","n":1,"payload":{"f":{"terms":[{"xi":[2],"coeff":"x1^2"}]},"g":{"terms":[{"xi":[1],"coeff":"x1^3"}]}}}"#;
        let a = serde_json::to_string(&run_json(q).body).unwrap();
        let b = serde_json::to_string(&run_json(q).body).unwrap();
        assert_eq!(a, b);
    }
}
