use std::io::Read;

use clap::Args;
use holocodes::building::{building_local_code, p2_evaluation_code, propagate_cell, LineValueVector, SectionSpace};
use holocodes::code::{rs_affine, rs_projective, selfdual_grs_weights, EvaluationSpec};
use holocodes::holo::{
    encode_matrix, holographic_encode, mumford_code, mumford_holographic_extend, tree_build, MumfordGraph,
};
use holocodes::proj::{link_graph, p1_points, ProjLine};
use holocodes::quantum::{
    crss_hermitian, crss_nested_pair, crss_self_orthogonal, eigenspace_oracle, five_qubit_code, qutrit_perfect_code,
    StabilizerCode,
};
use holocodes::reproduce::{acceptance, acceptance_one};
use holocodes::tiling::{pentagon_census, region_build, surface_code, toric_code, SurfaceComplex};
use holocodes::{Elem, ErrorCode, Field};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::json::{self, malformed};
use crate::{DualKind, FieldArgs, Output, Table, Variant};

#[derive(Args)]
pub struct RsEncode {
    #[command(flatten)]
    field: FieldArgs,
    /// Number of message symbols
    #[arg(long)]
    k: usize,
    /// Evaluation points: element indices, or P¹ indices with --projective (default: all)
    #[arg(long, value_delimiter = ',')]
    points: Option<Vec<u32>>,
    /// Evaluate on P¹ instead of the affine line
    #[arg(long)]
    projective: bool,
    /// Column weights as element indices (default: all 1)
    #[arg(long, value_delimiter = ',', conflicts_with = "selfdual_weights")]
    weights: Option<Vec<u32>>,
    /// Use the weights that make the code Hermitian self-dual (affine points, q a square)
    #[arg(long)]
    selfdual_weights: bool,
    /// Message as element indices
    #[arg(long, value_delimiter = ',')]
    message: Option<Vec<u32>>,
}

fn ok(payload: Value, diagnostics: Vec<String>) -> Result<Output, CliError> {
    Ok(Output { payload, diagnostics })
}

fn resolve_or(a: &FieldArgs, default_q: Option<u32>) -> Result<Field, CliError> {
    match (a.q, a.p) {
        (Some(q), None) if a.r.is_none() && a.modulus.is_none() => Ok(Field::of_order(q)?),
        (None, Some(p)) => Ok(Field::new(p, a.r.unwrap_or(1), a.modulus.as_deref())?),
        (None, None) if a.r.is_none() && a.modulus.is_none() => match default_q {
            Some(q) => Ok(Field::of_order(q)?),
            None => Err(CliError::usage("MissingField", "give --q, or --p with optional --r and --modulus")),
        },
        _ => Err(CliError::usage("ConflictingField", "give either --q or --p/--r/--modulus")),
    }
}

fn resolve(a: &FieldArgs) -> Result<Field, CliError> {
    resolve_or(a, None)
}

fn read_input(path: Option<&str>) -> Result<Value, CliError> {
    let text = match path {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::domain("InputUnreadable", e.to_string()))?;
            s
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::domain("InputUnreadable", format!("{p}: {e}")))?,
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| malformed(e.to_string()))?;
    // accept a whole CommandResult from another subcommand
    match (v.get("status"), v.get("payload")) {
        (Some(_), Some(p)) => Ok(p.clone()),
        _ => Ok(v),
    }
}

fn indices(f: &Field, v: &[u32]) -> Result<Vec<Elem>, CliError> {
    Ok(v.iter().map(|&i| f.element(i)).collect::<Result<_, _>>()?)
}

pub fn field(a: &FieldArgs) -> Result<Output, CliError> {
    let f = resolve(a)?;
    let g = f.generator();
    let mut diag = Vec::new();
    if f.order(g) == Some(f.q() - 1) {
        diag.push(format!("multiplicative group is cyclic: generator has order {}", f.q() - 1));
    }
    let payload = json!({
        "p": f.p(),
        "r": f.r(),
        "q": f.q(),
        "modulus": f.modulus(),
        "generator": json::elem(&f, g),
    });
    ok(payload, diag)
}

pub fn rs_encode(a: &RsEncode) -> Result<Output, CliError> {
    let f = resolve(&a.field)?;
    let mut diag = Vec::new();
    let spec = if a.projective {
        let all = p1_points(&f);
        let pts = match &a.points {
            None => all,
            Some(ix) => ix
                .iter()
                .map(|&i| {
                    all.get(i as usize)
                        .cloned()
                        .ok_or_else(|| CliError::usage("BadPoint", format!("P¹ index {i} out of range")))
                })
                .collect::<Result<_, _>>()?,
        };
        let weights = a.weights.as_deref().map(|w| indices(&f, w)).transpose()?;
        if a.selfdual_weights {
            return Err(CliError::usage("ConflictingArguments", "--selfdual-weights needs affine points"));
        }
        EvaluationSpec::projective(&f, &pts, weights.as_deref(), a.k)
    } else {
        let pts = match &a.points {
            None => f.elements().collect(),
            Some(ix) => indices(&f, ix)?,
        };
        let weights = if a.selfdual_weights {
            let w = selfdual_grs_weights(&f, &pts)?;
            diag.push("weights solve w^(q+1) = 1/Π(x_i − x_j)".into());
            Some(w)
        } else {
            a.weights.as_deref().map(|w| indices(&f, w)).transpose()?
        };
        EvaluationSpec::affine(&pts, weights.as_deref(), a.k)
    };
    let code = if a.projective { rs_projective(&f, &spec)? } else { rs_affine(&f, &spec)? };
    // the message holds polynomial coefficients, lowest degree first
    let codeword = match &a.message {
        Some(m) => json::elems(&f, &spec.encode(&f, &indices(&f, m)?)?),
        None => Value::Null,
    };
    ok(json!({"code": json::code(&code, None), "codeword": codeword}), diag)
}

pub fn code_distance(input: Option<&str>, bound: u64) -> Result<Output, CliError> {
    let code = json::parse_code(&read_input(input)?)?;
    let d = code.min_distance_bounded(bound)?;
    ok(json!({"n": code.n(), "k": code.k(), "min_distance": d}), vec!["distance certified exhaustively".into()])
}

pub fn code_dual(kind: DualKind, input: Option<&str>) -> Result<Output, CliError> {
    let code = json::parse_code(&read_input(input)?)?;
    let dual = match kind {
        DualKind::Euclidean => code.dual_euclidean(),
        DualKind::Hermitian => code.dual_hermitian()?,
    };
    ok(json::code(&dual, None), Vec::new())
}

/// Searches the distance within `bound`, reporting an exceeded bound as a
/// diagnostic rather than an error.
fn try_distance(s: &StabilizerCode, bound: u64, diag: &mut Vec<String>) -> Result<Option<usize>, CliError> {
    match s.distance_bounded(bound) {
        Ok(d) => {
            diag.push("distance certified exhaustively".into());
            Ok(Some(d))
        }
        Err(e) if e.code() == "SearchBoundExceeded" => {
            diag.push(format!("distance not computed: {e}"));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn crss_build(variant: Variant, input: Option<&str>, bound: u64) -> Result<Output, CliError> {
    let v = read_input(input)?;
    let s = match variant {
        Variant::SelfOrth => crss_self_orthogonal(&json::parse_code(&v)?)?,
        Variant::Nested => {
            let c1 = json::parse_code(v.get("c1").ok_or_else(|| malformed("missing \"c1\"".into()))?)?;
            let c2 = json::parse_code(v.get("c2").ok_or_else(|| malformed("missing \"c2\"".into()))?)?;
            crss_nested_pair(&c1, &c2)?
        }
        Variant::Hermitian => crss_hermitian(&json::parse_code(&v)?)?,
    };
    let mut diag = vec!["orthogonality verified".to_string()];
    let d = try_distance(&s, bound, &mut diag)?;
    ok(json::stabilizer(&s, d), diag)
}

pub fn crss_distance(input: Option<&str>, bound: u64) -> Result<Output, CliError> {
    let s = json::parse_stabilizer(&read_input(input)?)?;
    let d = s.distance_bounded(bound)?;
    ok(json::stabilizer(&s, Some(d)), vec!["distance certified exhaustively".into()])
}

pub fn crss_oracle_dim(input: Option<&str>, bound: u64) -> Result<Output, CliError> {
    let s = json::parse_stabilizer(&read_input(input)?)?;
    let dim = eigenspace_oracle(&s, bound)?;
    let expected = (s.field().q() as u64).pow(s.k() as u32);
    let mut diag = Vec::new();
    if dim == expected {
        diag.push(format!("oracle dimension equals q^k = {expected}"));
    }
    ok(json!({"n": s.n(), "k": s.k(), "dimension": dim, "expected": expected}), diag)
}

pub fn crss_five_qubit() -> Result<Output, CliError> {
    let s = five_qubit_code();
    let d = s.distance()?;
    ok(json!({"n": s.n(), "k": s.k(), "dQ": d}), vec!["distance certified exhaustively".into()])
}

pub fn crss_qutrit() -> Result<Output, CliError> {
    let code = qutrit_perfect_code();
    let legs = 1 + code.out_qudits;
    let mut pairs = Vec::new();
    for i in 0..legs {
        for j in i + 1..legs {
            pairs.push(json!({"inputs": [i, j], "isometry": code.is_isometry_from(&[i, j])}));
        }
    }
    let perfect = pairs.iter().all(|p| p["isometry"] == Value::Bool(true));
    let diag = if perfect { vec!["isometry from every pair of legs verified".to_string()] } else { Vec::new() };
    ok(json!({"code": code, "pairs": pairs, "perfect": perfect}), diag)
}

pub fn tree_encode(
    a: &FieldArgs,
    depth: usize,
    k: usize,
    message: Option<&[u32]>,
    input: Option<&str>,
) -> Result<Output, CliError> {
    let f = resolve(a)?;
    let t = tree_build(&f, depth)?;
    let inputs = match message {
        Some(m) => indices(&f, m)?,
        None => json::parse_elems(&f, &read_input(input)?)?,
    };
    let out = holographic_encode(&t, k, &inputs)?;
    ok(json!({"leaves": t.leaves(), "boundary": json::elems(&f, &out)}), Vec::new())
}

pub fn tree_matrix(a: &FieldArgs, depth: usize, k: usize) -> Result<Output, CliError> {
    let f = resolve(a)?;
    let t = tree_build(&f, depth)?;
    let m = encode_matrix(&t, k)?;
    let rank = m.rank(&f);
    ok(json!({"rows": m.rows(), "cols": m.cols(), "rank": rank, "matrix": json::matrix(&f, &m)}), Vec::new())
}

pub fn mumford(a: &FieldArgs, k: usize, depth: Option<usize>, input: Option<&str>) -> Result<Output, CliError> {
    let f = resolve(a)?;
    let g: MumfordGraph = serde_json::from_value(read_input(input)?).map_err(|e| malformed(e.to_string()))?;
    let c = mumford_code(&f, &g, k)?;
    let mut payload = json!({
        "betti": c.betti,
        "constraint_rank": c.constraint_rank,
        "solution_dim": c.solution_dim,
        "expected_dim": c.expected_dim,
        "full_rank": c.full_rank(),
        "free_legs": c.free_legs,
        "code": json::code(&c.code, None),
    });
    if let Some(depth) = depth {
        let e = mumford_holographic_extend(&f, &g, k, depth)?;
        payload["depth"] = json!(depth);
        payload["input_dim"] = json!(e.input_dim);
        payload["boundary_legs"] = json!(e.matrix.cols());
        payload["rank"] = json!(e.rank);
        payload["matrix"] = json::matrix(&f, &e.matrix);
    }
    ok(payload, Vec::new())
}

pub fn tiling_census(n: usize) -> Result<Output, CliError> {
    let c = pentagon_census(n);
    let total = c.total_faces(n);
    ok(json!({"steps": c.steps, "total_faces": total}), Vec::new())
}

fn euler(c: &SurfaceComplex) -> i64 {
    c.vertices as i64 - c.edges.len() as i64 + c.faces.len() as i64
}

pub fn tiling_region(n: usize) -> Result<Output, CliError> {
    let c = region_build(n)?;
    let diag = vec![format!("Euler characteristic {}", euler(&c))];
    ok(serde_json::to_value(&c).expect("complexes serialize"), diag)
}

pub fn surface(a: &FieldArgs, input: Option<&str>, bound: u64) -> Result<Output, CliError> {
    let f = resolve_or(a, Some(2))?;
    let v = read_input(input)?;
    let v = v.get("complex").cloned().unwrap_or(v);
    let c: SurfaceComplex = serde_json::from_value(v).map_err(|e| malformed(e.to_string()))?;
    c.validate()?;
    let code = surface_code(&f, &c, Some(bound))?;
    ok(serde_json::to_value(&code).expect("codes serialize"), surface_diagnostics(code.d))
}

pub fn toric(l: usize, a: &FieldArgs, bound: u64) -> Result<Output, CliError> {
    let f = resolve_or(a, Some(2))?;
    let c = toric_code(l)?;
    let code = surface_code(&f, &c, Some(bound))?;
    let diag = surface_diagnostics(code.d);
    ok(json!({"complex": c, "code": code}), diag)
}

fn surface_diagnostics(d: Option<usize>) -> Vec<String> {
    let mut diag = vec!["orthogonality verified".to_string()];
    diag.push(match d {
        Some(_) => "distance certified exhaustively".into(),
        None => "no logical operators, distance undefined".into(),
    });
    diag
}

pub fn building_link(a: &FieldArgs) -> Result<Output, CliError> {
    let f = resolve(a)?;
    let link = link_graph(&f);
    let coords = |v: &[Vec<u32>]| -> Vec<Value> {
        v.iter().map(|c| Value::Array(c.iter().map(|&i| json::elem(&f, Elem(i))).collect())).collect()
    };
    ok(
        json!({
            "points": coords(&link.points),
            "lines": coords(&link.lines),
            "edges": link.edges,
            "vertex_count": link.vertex_count(),
            "flags": link.edges.len(),
        }),
        Vec::new(),
    )
}

fn line_values(f: &Field, x: &LineValueVector) -> Value {
    json!({"line": json::elems(f, x.line.coeffs()), "values": json::elems(f, &x.values)})
}

fn parse_line(f: &Field, v: &Value) -> Result<ProjLine, CliError> {
    let coeffs = json::parse_elems(f, v)?;
    ProjLine::new(f, &coeffs).ok_or_else(|| malformed(format!("{v} is not a line of P²")))
}

pub fn building_code(a: &FieldArgs, m: usize, section: Option<&[u32]>, bound: u64) -> Result<Output, CliError> {
    let f = resolve(a)?;
    let code = p2_evaluation_code(&f, m)?;
    let d = code.min_distance_bounded(bound)?;
    let mut payload = json!({"code": json::code(&code, Some(d))});
    let mut diag = vec!["distance certified exhaustively".to_string()];
    if let Some(s) = section {
        let space = SectionSpace::new(&f, m);
        let local = building_local_code(&space, &indices(&f, s)?)?;
        payload["outputs"] = Value::Array(local.outputs.iter().map(|x| line_values(&f, x)).collect());
        payload["checks"] = json!(local.checks);
        diag.push(format!("{} pairwise consistencies verified", local.checks));
    }
    ok(payload, diag)
}

pub fn building_propagate(a: &FieldArgs, m: usize, input: Option<&str>) -> Result<Output, CliError> {
    let f = resolve(a)?;
    let v = read_input(input)?;
    let space = SectionSpace::new(&f, m);
    let known = v
        .get("known")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("missing \"known\" list".into()))?
        .iter()
        .map(|x| -> Result<LineValueVector, CliError> {
            let line = parse_line(&f, x.get("line").ok_or_else(|| malformed("missing \"line\"".into()))?)?;
            let values = json::parse_elems(&f, x.get("values").ok_or_else(|| malformed("missing \"values\"".into()))?)?;
            Ok(LineValueVector { line, values })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let target = parse_line(&f, v.get("target").ok_or_else(|| malformed("missing \"target\"".into()))?)?;
    let out = propagate_cell(&space, &known, &target)?;
    ok(
        json!({
            "base": line_values(&f, &out.base),
            "directions": json::matrix(&f, &out.directions),
            "output_dim": out.output_dim(),
            "section_dim": out.section_dim,
            "constraint_rank": out.constraint_rank,
        }),
        vec!["constraints consistent".into()],
    )
}

pub fn reproduce(table: Option<Table>, criterion: Option<u32>) -> Result<Output, CliError> {
    if let Some(Table::Census) = table {
        let rows: Vec<Value> =
            pentagon_census(6).steps.iter().map(|s| json!({"N": s.step, "m": s.m, "n": s.n})).collect();
        return ok(json!({"table": rows}), Vec::new());
    }
    let results = match criterion {
        Some(id) => {
            vec![acceptance_one(id).ok_or_else(|| CliError::usage("UnknownCriterion", format!("no criterion {id}")))?]
        }
        None => acceptance(),
    };
    let diag: Vec<String> = results.iter().map(|c| c.to_string()).collect();
    let failed: Vec<u32> = results.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    let payload = json!({"criteria": results, "failed": failed});
    if failed.is_empty() {
        ok(payload, diag)
    } else {
        Err(CliError::domain("AcceptanceFailed", format!("criteria {failed:?} failed")).with_report(payload, diag))
    }
}
