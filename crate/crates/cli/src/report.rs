//! Runs a request against the library and shapes the result as JSON and as
//! an aligned text table.

use cembed_core::orbits::{self, ComponentRole, OrbitPoset};
use cembed_core::tangent::{self, TangentReport};
use cembed_core::{dynkin, NodeSet, OrbitKey, Q, RootSystem, Weight};
use serde_json::{json, Value};

use crate::request::{parse_group, parse_levi, Command, Request};
use crate::table::Table;

pub const SCHEMA_VERSION: u32 = 1;

pub enum Failure {
    /// Bad input: exit code 2.
    Input(String),
    /// A library result broke an invariant: exit code 1.
    Internal(String),
}

impl From<cembed_core::Error> for Failure {
    fn from(e: cembed_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

pub struct Outcome {
    pub result: Value,
    pub table: String,
}

fn one_based(s: NodeSet) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn nodes_text(s: NodeSet) -> String {
    s.to_string()
}

/// Integers that fit in `u64` become JSON numbers, larger ones strings.
fn big(x: &impl ToString) -> Value {
    let s = x.to_string();
    s.parse::<u64>().map_or(Value::String(s), Value::from)
}

fn int_vector(v: &[Q]) -> Value {
    Value::from(v.iter().map(|x| big(&x.to_integer())).collect::<Vec<_>>())
}

fn primitive_rows(rows: &[Vec<Q>]) -> Value {
    Value::from(rows.iter().map(|r| int_vector(&cembed_core::linalg::primitive(r))).collect::<Vec<_>>())
}

pub fn run(req: &Request) -> Result<Outcome, Failure> {
    let sys = parse_group(&req.group).map_err(Failure::Input)?;
    let levi = match (&req.levi, req.command) {
        (Some(spec), _) => parse_levi(spec, &sys).map_err(Failure::Input)?,
        (None, Command::Rootinfo) => NodeSet::empty(),
        (None, _) => return Err(Failure::Input("missing --levi (node list, `empty` or `full`)".into())),
    };
    if !req.generators.is_empty() && req.command != Command::General {
        return Err(Failure::Input("generators are only used by `general`".into()));
    }
    if req.crosscheck && !matches!(req.command, Command::Orbits | Command::General) {
        return Err(Failure::Input("--crosscheck applies to `orbits` and `general`".into()));
    }
    match req.command {
        Command::Orbits => orbits_report(&sys, levi, req.crosscheck),
        Command::Modality => modality_report(&sys, levi),
        Command::Finite => finite_report(&sys, levi),
        Command::Smooth => smooth_report(&sys, levi),
        Command::Tangent => tangent_report(&sys, levi),
        Command::General => general_report(&sys, levi, &req.generators, req.crosscheck),
        Command::Rootinfo => rootinfo_report(&sys),
    }
}

fn check_poset(sys: &RootSystem, p: &OrbitPoset) -> Result<(), Failure> {
    for o in &p.orbits {
        if o.dim_orbit + o.dim_stab != sys.dim_group() || o.dim_y != o.dim_orbit + o.d_g {
            return Err(Failure::Internal(format!("orbit {} has inconsistent dimensions", o.pi_y)));
        }
    }
    Ok(())
}

fn orbit_records(p: &OrbitPoset) -> Vec<Value> {
    p.orbits
        .iter()
        .map(|o| {
            json!({
                "pi_y": one_based(o.pi_y),
                "boundary": one_based(o.boundary),
                "d_g": o.d_g,
                "dim_orbit": o.dim_orbit,
                "dim_y": o.dim_y,
                "stab": {
                    "unipotent_dim": o.stab_unipotent_dim,
                    "levi_nodes": one_based(o.stab_levi_nodes),
                    "torus_dim": o.stab_torus_dim,
                },
            })
        })
        .collect()
}

fn orbit_table(p: &OrbitPoset) -> Table {
    let mut t = Table::new(&["#", "pi_y", "boundary", "d_G", "dim_orbit", "dim_Y", "unipotent", "stab_levi", "torus"]);
    for (i, o) in p.orbits.iter().enumerate() {
        t.row(vec![
            i.to_string(),
            nodes_text(o.pi_y),
            nodes_text(o.boundary),
            o.d_g.to_string(),
            o.dim_orbit.to_string(),
            o.dim_y.to_string(),
            o.stab_unipotent_dim.to_string(),
            nodes_text(o.stab_levi_nodes),
            o.stab_torus_dim.to_string(),
        ]);
    }
    t
}

fn covers(p: &OrbitPoset) -> Value {
    Value::from(p.covers.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>())
}

fn crosscheck_value(sys: &RootSystem, levi: NodeSet) -> Result<Value, Failure> {
    let issues = orbits::crosscheck(sys, levi)?;
    if !issues.is_empty() {
        return Err(Failure::Internal(format!("crosscheck failed: {}", issues.join("; "))));
    }
    Ok(json!({ "agree": true, "issues": [] }))
}

fn orbits_report(sys: &RootSystem, levi: NodeSet, crosscheck: bool) -> Result<Outcome, Failure> {
    let p = orbits::enumerate_canonical_orbits(sys, levi)?;
    check_poset(sys, &p)?;
    let modality = p.modality();
    let mut result = json!({
        "orbit_count": p.orbits.len(),
        "modality": modality,
        "dim_group": sys.dim_group(),
        "orbits": orbit_records(&p),
        "closure_covers": covers(&p),
    });
    let mut table = format!("orbits: {}\nmodality: {modality}\n", p.orbits.len());
    if crosscheck {
        result["crosscheck"] = crosscheck_value(sys, levi)?;
        table.push_str("crosscheck: agree\n");
    }
    table.push_str(&orbit_table(&p).render());
    Ok(Outcome { result, table })
}

fn modality_report(sys: &RootSystem, levi: NodeSet) -> Result<Outcome, Failure> {
    let m = orbits::modality_canonical(sys, levi)?;
    let restricted = orbits::modality_canonical_restricted(sys, levi)?;
    if m != restricted {
        return Err(Failure::Internal(format!("modality {m} differs from restricted maximum {restricted}")));
    }
    Ok(Outcome { result: json!({ "modality": m }), table: format!("modality: {m}\n") })
}

fn finite_report(sys: &RootSystem, levi: NodeSet) -> Result<Outcome, Failure> {
    let finite = orbits::has_finitely_many_orbits(sys, levi)?;
    let m = orbits::modality_canonical(sys, levi)?;
    if finite != (m == 0) {
        return Err(Failure::Internal(format!("finiteness {finite} contradicts modality {m}")));
    }
    Ok(Outcome {
        result: json!({ "finite": finite, "modality": m }),
        table: format!("finite: {finite}\nmodality: {m}\n"),
    })
}

fn smooth_report(sys: &RootSystem, levi: NodeSet) -> Result<Outcome, Failure> {
    let r = orbits::is_smooth_canonical(sys, levi)?;
    let mut t = Table::new(&["component", "nodes", "role"]);
    let comps: Vec<Value> = r
        .components
        .iter()
        .map(|c| {
            let (role, missing) = match c.role {
                ComponentRole::InLevi => ("in_levi", None),
                ComponentRole::HyperplaneStabilizer { missing } => ("hyperplane_stabilizer", Some(missing + 1)),
                ComponentRole::Obstruction => ("obstruction", None),
            };
            let name = format!("{}{}", c.kind, c.rank);
            let role_text = missing.map_or(role.to_string(), |m| format!("{role} (missing {m})"));
            t.row(vec![name.clone(), nodes_text(c.nodes), role_text]);
            json!({ "type": name, "nodes": one_based(c.nodes), "role": role, "missing_node": missing })
        })
        .collect();
    Ok(Outcome {
        result: json!({ "smooth": r.smooth, "components": comps }),
        table: format!("smooth: {}\n{}", r.smooth, t.render()),
    })
}

fn tangent_component(name: &str, offset: usize, r: &TangentReport) -> (Value, Table) {
    let mut t = Table::new(&["node", "retained", "dim V_G", "dim V_L", "contribution"]);
    let summands: Vec<Value> = r
        .summands
        .iter()
        .map(|s| {
            t.row(vec![
                (s.node + offset + 1).to_string(),
                s.retained.to_string(),
                s.g_dim.to_string(),
                s.l_dim.to_string(),
                s.contribution.to_string(),
            ]);
            json!({
                "node": s.node + offset + 1,
                "retained": s.retained,
                "g_dim": big(&s.g_dim),
                "l_dim": big(&s.l_dim),
                "contribution": big(&s.contribution),
            })
        })
        .collect();
    let removed: Vec<usize> = r.removed.iter().map(|i| i + offset + 1).collect();
    let value = json!({
        "type": name,
        "removed": removed,
        "dim_ce": r.dim_ce,
        "total_dim": big(&r.total_dim),
        "summands": summands,
    });
    (value, t)
}

fn tangent_report(sys: &RootSystem, levi: NodeSet) -> Result<Outcome, Failure> {
    let mut comps = Vec::new();
    let mut table = String::new();
    let mut total = 0u128;
    let mut dim_ce = 0usize;
    for c in sys.components() {
        let simple = RootSystem::simple(c.kind, c.rank)?;
        let local: NodeSet = levi.intersection(c.nodes()).iter().map(|i| i - c.offset).collect();
        let r = tangent::tangent_report(&simple, local)?;
        let part: u128 = r.total_dim.to_string().parse().map_err(|_| Failure::Internal("tangent dimension overflow".into()))?;
        if part < r.dim_ce as u128 {
            return Err(Failure::Internal(format!("tangent space of {}{} smaller than the variety", c.kind, c.rank)));
        }
        let name = format!("{}{}", c.kind, c.rank);
        let (value, t) = tangent_component(&name, c.offset, &r);
        total += part;
        dim_ce += r.dim_ce;
        table.push_str(&format!("{name}: dim CE {}, tangent {}\n{}", r.dim_ce, r.total_dim, t.render()));
        comps.push(value);
    }
    let result = json!({ "components": comps, "dim_ce": dim_ce, "total_dim": big(&total) });
    Ok(Outcome { result, table: format!("dim CE: {dim_ce}\ntotal: {total}\n{table}") })
}

fn general_report(sys: &RootSystem, levi: NodeSet, gens: &[Vec<i64>], crosscheck: bool) -> Result<Outcome, Failure> {
    let weights: Vec<Weight> = if gens.is_empty() {
        (0..sys.rank()).map(|i| sys.fundamental_weight(i)).collect()
    } else {
        gens.iter()
            .map(|g| {
                if g.len() != sys.rank() {
                    return Err(Failure::Input(format!("generator {g:?} needs {} coordinates", sys.rank())));
                }
                if g.iter().any(|&x| x < 0) {
                    return Err(Failure::Input(format!("generator {g:?} is not dominant")));
                }
                Ok(cembed_core::repcalc::fundamental(g))
            })
            .collect::<Result<_, _>>()?
    };
    let g = orbits::enumerate_general_orbits(sys, levi, &weights)?;
    check_poset(sys, &g.poset)?;
    let mut warnings = Vec::new();
    if !g.full_rank {
        warnings.push("generators do not span the weight space".to_string());
    }
    let unsaturated = g.poset.orbits.iter().filter(|o| !o.saturated).count();
    if unsaturated > 0 {
        warnings.push(format!(
            "{unsaturated} orbit(s) have a non-saturated lattice; their stabilizer torus may be disconnected"
        ));
    }
    let mut records = orbit_records(&g.poset);
    for (rec, o) in records.iter_mut().zip(&g.poset.orbits) {
        if let OrbitKey::Face(f) = &o.key {
            let rays: Vec<Vec<Q>> = f.rays.iter().map(|&i| g.sigma.rays()[i].clone()).collect();
            rec["face"] = json!({ "dim": f.dim, "rays": primitive_rows(&rays), "tight": f.tight });
        }
        rec["saturated"] = Value::from(o.saturated);
    }
    let gen_values: Vec<Value> = weights.iter().map(|w| int_vector(w.coords())).collect();
    let mut result = json!({
        "generators": gen_values,
        "full_rank": g.full_rank,
        "sigma": {
            "dim": g.sigma.dim(),
            "lineality_dim": g.sigma.lineality_dim(),
            "rays": primitive_rows(g.sigma.rays()),
            "lineality": primitive_rows(g.sigma.lineality()),
            "halfspaces": primitive_rows(g.sigma.halfspaces()),
        },
        "orbit_count": g.poset.orbits.len(),
        "modality": g.poset.modality(),
        "orbits": records,
        "closure_covers": covers(&g.poset),
        "warnings": warnings,
    });
    let mut table = format!(
        "orbits: {}\nmodality: {}\nsigma: dim {}, {} rays, lineality {}\n",
        g.poset.orbits.len(),
        g.poset.modality(),
        g.sigma.dim(),
        g.sigma.rays().len(),
        g.sigma.lineality_dim()
    );
    for w in &warnings {
        table.push_str(&format!("warning: {w}\n"));
    }
    if crosscheck {
        let fundamentals = gens.is_empty()
            || (gens.len() == sys.rank()
                && gens.iter().enumerate().all(|(i, g)| g.iter().enumerate().all(|(j, &x)| x == i64::from(i == j))));
        if !fundamentals {
            return Err(Failure::Input("--crosscheck needs the fundamental weights as generators".into()));
        }
        result["crosscheck"] = crosscheck_value(sys, levi)?;
        table.push_str("crosscheck: agree\n");
    }
    table.push_str(&orbit_table(&g.poset).render());
    Ok(Outcome { result, table })
}

fn rootinfo_report(sys: &RootSystem) -> Result<Outcome, Failure> {
    let comps: Vec<Value> = sys
        .components()
        .iter()
        .map(|c| json!({ "type": format!("{}{}", c.kind, c.rank), "nodes": one_based(c.nodes()) }))
        .collect();
    let singularity = if sys.is_simple() { dynkin::singularity(sys)?.map(|s| s + 1) } else { None };
    let norms: Vec<i64> = (0..sys.rank()).map(|i| sys.root_norm(i)).collect();
    let result = json!({
        "type": sys.type_string(),
        "rank": sys.rank(),
        "dim_group": sys.dim_group(),
        "positive_roots": sys.positive_roots().len(),
        "cartan": sys.cartan(),
        "root_norms": norms,
        "components": comps,
        "singularity": singularity,
        "extreme_nodes": one_based(dynkin::extreme_nodes(sys)),
    });
    let mut t = Table::new(&["node", "norm", "cartan row"]);
    for (i, row) in sys.cartan().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        t.row(vec![(i + 1).to_string(), norms[i].to_string(), cells.join(" ")]);
    }
    let table = format!(
        "type: {}\nrank: {}\ndim G: {}\npositive roots: {}\n{}",
        sys.type_string(),
        sys.rank(),
        sys.dim_group(),
        sys.positive_roots().len(),
        t.render()
    );
    Ok(Outcome { result, table })
}
