//! Command implementations, generic over the scalar field.

use std::sync::Arc;

use anyhow::{anyhow, bail, Result};
use bhl_core::braidedhopf::{bosonize, solve_antipode, yd_braiding, yd_braiding_inverse, HopfAlgebraData, YDModuleData};
use bhl_core::builtins;
use bhl_core::coend::{compute_relative_coend, stability_report, Diagram};
use bhl_core::comodcat::Comodule;
use bhl_core::gradedcat::{GradedMorphism as Mor, GradedObject};
use bhl_core::reconstruct::{reconstruct, verify_reconstruction};
use bhl_core::report::{Check, CheckReport};
use bhl_core::{Error, Field};
use serde_json::{json, Value};

use crate::report::{checks_json, morphism_json};
use crate::specfile::{export_hopf, Loaded, SpecFile};

/// What a command produced: machine-readable data plus its checks.
pub struct Outcome<K: Field> {
    pub algebra: String,
    pub data: Value,
    pub report: CheckReport<K>,
}

impl<K: Field> Outcome<K> {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn checks_json(&self) -> Value {
        checks_json(&self.report)
    }
}

/// A probe item: `H` is the carrier of the Hopf algebra, anything else is
/// a colon-separated degree exponent vector giving a one-dimensional object.
pub fn parse_probes<K: Field>(spec: &str, hopf: &HopfAlgebraData<K>) -> Result<Vec<GradedObject<K>>> {
    let ctx = hopf.ctx();
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let item = item.trim();
            if item == "H" {
                return Ok(hopf.carrier().clone());
            }
            let exps = item
                .split(':')
                .map(|e| {
                    e.parse::<i64>()
                        .map_err(|_| anyhow!(Error::InvalidParameter(format!("bad probe {item:?}"))))
                })
                .collect::<Result<Vec<_>>>()?;
            let g = ctx.group().element(&exps)?;
            Ok(GradedObject::line(ctx, &format!("v{}", ctx.group().format(g)), g))
        })
        .collect()
}

fn diagram<K: Field>(h: Arc<HopfAlgebraData<K>>, probes: Option<&str>) -> Result<Diagram<K>> {
    Ok(match probes {
        Some(p) => {
            let probes = parse_probes(p, &h)?;
            Diagram::with_probes(h, &probes)?
        }
        None => Diagram::default_for(h)?,
    })
}

fn labels<K: Field>(v: &GradedObject<K>) -> Value {
    json!(v.labels())
}

pub fn check_hopf<K: Field>(l: &Loaded<K>, algebra: Option<&str>) -> Result<Outcome<K>> {
    let (name, h) = l.algebra(algebra)?;
    let report = h.check()?;
    Ok(Outcome {
        data: json!({"dim": h.dim(), "basis": labels(h.carrier())}),
        algebra: name,
        report,
    })
}

pub fn antipode<K: Field>(l: &Loaded<K>, algebra: Option<&str>) -> Result<Outcome<K>> {
    let (name, h) = l.algebra(algebra)?;
    let s = solve_antipode(&h.bialgebra)?;
    let mut report = CheckReport::new();
    report.push(Check::morphisms(
        "left_convolution_inverse",
        &h.bialgebra.convolution(&s, &Mor::identity(h.carrier()))?,
        &h.bialgebra.unit_counit()?,
    ));
    report.push(Check::morphisms(
        "right_convolution_inverse",
        &h.bialgebra.convolution(&Mor::identity(h.carrier()), &s)?,
        &h.bialgebra.unit_counit()?,
    ));
    if let Some(given) = l.supplied_antipodes.get(&name) {
        report.push(Check::morphisms("matches_supplied", &s, given));
    }
    report.push(Check::flag("invertible", s.is_iso(), "antipode is bijective"));
    Ok(Outcome {
        data: json!({"antipode": morphism_json(&s), "basis": labels(h.carrier())}),
        algebra: name,
        report,
    })
}

/// Module checks, braid relation on every triple and `c⁻¹c = cc⁻¹ = id`.
pub fn yd_report<K: Field>(mods: &[(String, YDModuleData<K>)]) -> Result<CheckReport<K>> {
    let mut r = CheckReport::new();
    for (n, m) in mods {
        r.extend_prefixed(&format!("module[{n}]"), m.check()?);
    }
    for (na, a) in mods {
        for (nb, b) in mods {
            let c = yd_braiding(a, b)?;
            let ci = yd_braiding_inverse(a, b)?;
            r.push(Check::morphisms(
                format!("inverse_left[{na},{nb}]"),
                &ci.compose(&c)?,
                &Mor::identity(c.source()),
            ));
            r.push(Check::morphisms(
                format!("inverse_right[{na},{nb}]"),
                &c.compose(&ci)?,
                &Mor::identity(c.target()),
            ));
            for (nc, cm) in mods {
                let (ia, ic) = (Mor::identity(&a.carrier), Mor::identity(&cm.carrier));
                let ib = Mor::identity(&b.carrier);
                let lhs = Mor::compose_all(&[
                    &yd_braiding(b, cm)?.tensor(&ia)?,
                    &ib.tensor(&yd_braiding(a, cm)?)?,
                    &yd_braiding(a, b)?.tensor(&ic)?,
                ])?;
                let rhs = Mor::compose_all(&[
                    &ic.tensor(&yd_braiding(a, b)?)?,
                    &yd_braiding(a, cm)?.tensor(&ib)?,
                    &ia.tensor(&yd_braiding(b, cm)?)?,
                ])?;
                r.push(Check::morphisms(format!("braid_relation[{na},{nb},{nc}]"), &lhs, &rhs));
            }
        }
    }
    Ok(r)
}

pub fn yd_check<K: Field>(l: &Loaded<K>, spec: &SpecFile) -> Result<Outcome<K>> {
    let mods: Vec<(String, YDModuleData<K>)> = if !l.yd_modules.is_empty() {
        l.yd_modules.iter().map(|(n, m)| (n.clone(), m.clone())).collect()
    } else {
        let is_z2 = spec.algebras.values().any(|a| {
            a.builtin.as_deref() == Some("group_algebra") && (a.params.is_empty() || a.params == [2])
        });
        if !is_z2 {
            bail!(Error::InvalidParameter(
                "no yd_modules in the spec; builtin examples exist only for group_algebra:2".into()
            ));
        }
        builtins::cyclic_yd_examples::<K>()?
            .into_iter()
            .enumerate()
            .map(|(i, m)| (format!("example{i}"), m))
            .collect()
    };
    let report = yd_report(&mods)?;
    let algebra = match spec.yd_modules.values().next() {
        Some(y) => y.hopf.clone(),
        None => "group_algebra".into(),
    };
    Ok(Outcome {
        data: json!({"modules": mods.iter().map(|(n, m)| json!({"name": n, "dim": m.carrier.dim()})).collect::<Vec<_>>()}),
        algebra,
        report,
    })
}

pub fn bosonize_cmd<K: Field>(l: &Loaded<K>, algebra: Option<&str>) -> Result<Outcome<K>> {
    let (name, h) = l.algebra(algebra)?;
    let b = bosonize(&h)?;
    let mut report = CheckReport::new();
    report.extend_prefixed("bosonization", b.hopf.check()?);
    report.extend(b.check_projection()?);
    let export = export_hopf(&format!("{name}_bosonized"), &b.hopf);
    Ok(Outcome {
        data: json!({
            "dim": b.hopf.dim(),
            "basis": labels(b.hopf.carrier()),
            "spec": serde_json::to_value(&export)?,
        }),
        algebra: name,
        report,
    })
}

pub fn reconstruct_cmd<K: Field>(l: &Loaded<K>, algebra: Option<&str>, probes: Option<&str>) -> Result<Outcome<K>> {
    let (name, h) = l.algebra(algebra)?;
    let d = diagram(h, probes)?;
    let c = compute_relative_coend(&d)?;
    let rec = reconstruct(&c)?;
    let mut report = CheckReport::new();
    report.extend_prefixed("coend", c.residual_report.clone());
    report.extend_prefixed("reconstructed", rec.hopf.check()?);
    Ok(Outcome {
        data: json!({
            "coend_dim": c.dim(),
            "ambient_dim": c.quotient.ambient_dim,
            "dinaturality_relations": c.dinaturality_count,
            "balancing_relations": c.balancing_count,
            "diagram": d.names,
            "basis": labels(&c.carrier),
            "m": morphism_json(rec.m()),
            "u": morphism_json(rec.u()),
            "delta": morphism_json(rec.delta()),
            "eps": morphism_json(rec.eps()),
            "antipode": morphism_json(rec.s()),
        }),
        algebra: name,
        report,
    })
}

pub fn verify<K: Field>(l: &Loaded<K>, algebra: Option<&str>, probes: Option<&str>) -> Result<Outcome<K>> {
    let (name, h) = l.algebra(algebra)?;
    let d = diagram(h, probes)?;
    let v = verify_reconstruction(&d)?;
    Ok(Outcome {
        data: json!({
            "original_dim": v.original_dim,
            "coend_dim": v.coend_dim,
            "ambient_dim": v.ambient_dim,
            "relation_count": v.relation_count,
            "diagram": d.names,
            "comparison": morphism_json(&v.comparison.map),
        }),
        algebra: name,
        report: v.report,
    })
}

/// The three standard enlargements of the default diagram.
pub fn enlargements<K: Field>(d: &Diagram<K>) -> Result<Vec<(&'static str, Diagram<K>)>> {
    let h = d.hopf.clone();
    let ctx = h.ctx();
    let g = ctx.group().generators().first().copied().unwrap_or(ctx.group().identity());
    let x = GradedObject::new(ctx, vec![("x0".into(), ctx.group().identity()), ("x1".into(), g), ("x2".into(), g)])?;
    let reg = Comodule::regular(h.clone());

    let mut act = d.clone();
    act.add_object("H◁X", reg.act(&x)?)?;
    let mut sum = d.clone();
    sum.add_object("H⊕1", reg.direct_sum(&Comodule::unit(h.clone()))?)?;
    let mut dual = d.clone();
    dual.add_object("*H", reg.dual()?)?;
    Ok(vec![("act", act), ("direct_sum", sum), ("dual", dual)])
}

pub fn stability<K: Field>(l: &Loaded<K>, algebra: Option<&str>, probes: Option<&str>) -> Result<Outcome<K>> {
    let (name, h) = l.algebra(algebra)?;
    let d = diagram(h, probes)?;
    let small = compute_relative_coend(&d)?;
    let mut report = CheckReport::new();
    let mut sizes = Vec::new();
    for (n, big) in enlargements(&d)? {
        sizes.push(json!({"name": n, "objects": big.len()}));
        let large = compute_relative_coend(&big)?;
        report.extend_prefixed(&format!("enlargement.{n}"), stability_report(&small, &large)?);
    }
    Ok(Outcome {
        data: json!({"base_objects": d.len(), "enlargements": sizes}),
        algebra: name,
        report,
    })
}
