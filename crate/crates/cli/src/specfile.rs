//! JSON specification files describing graded categories, Hopf algebras and
//! Yetter-Drinfeld modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context as _, Result};
use bhl_core::braidedhopf::{BialgebraData, HopfAlgebraData, YDModuleData};
use bhl_core::builtins;
use bhl_core::exactalg::{format_scalar, parse_scalar};
use bhl_core::gradedcat::{AbelianGroup, Bicharacter, Context, GradedMorphism, GradedObject};
use bhl_core::{Error, Field, Matrix};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default)]
    pub field: FieldSpec,
    #[serde(default)]
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bicharacter: Option<BicharacterSpec>,
    #[serde(default)]
    pub objects: BTreeMap<String, Vec<BasisVector>>,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub yd_modules: BTreeMap<String, YdSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub cyclotomic_order: u32,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { cyclotomic_order: 1 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub invariant_factors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicharacterSpec {
    pub root_order: u32,
    pub exponent_matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisVector {
    pub label: String,
    #[serde(default)]
    pub degree: Vec<i64>,
}

/// Matrix entries: integers or strings such as `"-3/2"` or `"1 + z^2"`.
pub type MatrixSpec = Vec<Vec<Value>>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<MatrixSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdSpec {
    pub hopf: String,
    pub carrier: String,
    pub action: MatrixSpec,
    pub coaction: MatrixSpec,
}

/// Parses a spec file, reporting JSON errors with line and column.
pub fn parse_spec(text: &str) -> Result<SpecFile> {
    serde_json::from_str(text).map_err(|e| {
        anyhow!(Error::Parse(format!(
            "{} at line {} column {}",
            e,
            e.line(),
            e.column()
        )))
    })
}

/// `NAME` or `NAME:p1,p2,...`.
pub fn parse_builtin_arg(arg: &str) -> Result<(String, Vec<i64>)> {
    let (name, params) = match arg.split_once(':') {
        Some((n, p)) => (n, p),
        None => (arg, ""),
    };
    let params = params
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| anyhow!(Error::InvalidParameter(format!("bad builtin parameter {s:?}"))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((name.to_string(), params))
}

impl SpecFile {
    /// Spec with a single builtin algebra named after it.
    pub fn from_builtin(name: &str, params: &[i64]) -> Self {
        let mut s = SpecFile::default();
        s.algebras.insert(
            name.to_string(),
            AlgebraSpec {
                builtin: Some(name.to_string()),
                params: params.to_vec(),
                ..Default::default()
            },
        );
        s
    }

    /// Cyclotomic order needed to hold every scalar of the spec.
    pub fn required_field_order(&self) -> Result<u32> {
        let mut order = self.field.cyclotomic_order.max(1);
        for a in self.algebras.values() {
            if let Some(b) = &a.builtin {
                order = lcm(order, builtins::field_order(b, &a.params)?);
            }
        }
        Ok(order)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Everything a spec file defines, over the scalar type `K`.
pub struct Loaded<K: Field> {
    pub ctx: Context<K>,
    pub objects: BTreeMap<String, GradedObject<K>>,
    pub algebras: BTreeMap<String, Arc<HopfAlgebraData<K>>>,
    /// Antipodes supplied explicitly in the file.
    pub supplied_antipodes: BTreeMap<String, GradedMorphism<K>>,
    pub yd_modules: BTreeMap<String, YDModuleData<K>>,
}

impl<K: Field> Loaded<K> {
    pub fn algebra(&self, name: Option<&str>) -> Result<(String, Arc<HopfAlgebraData<K>>)> {
        match name {
            Some(n) => self
                .algebras
                .get(n)
                .map(|h| (n.to_string(), h.clone()))
                .ok_or_else(|| anyhow!(Error::Parse(format!("no algebra named {n:?}")))),
            None if self.algebras.len() == 1 => {
                let (n, h) = self.algebras.iter().next().expect("one algebra");
                Ok((n.clone(), h.clone()))
            }
            None => bail!(Error::Parse(format!(
                "choose an algebra with --algebra among {:?}",
                self.algebras.keys().collect::<Vec<_>>()
            ))),
        }
    }
}

fn parse_matrix<K: Field>(what: &str, m: &MatrixSpec, field_order: u32) -> Result<Matrix<K>> {
    let rows = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, v)| {
                    let text = match v {
                        Value::String(s) => s.clone(),
                        Value::Number(n) if n.is_i64() => n.to_string(),
                        other => bail!(Error::Parse(format!("{what}[{r}][{c}]: expected a scalar, got {other}"))),
                    };
                    parse_scalar::<K>(&text, field_order)
                        .map_err(|e| anyhow!(e).context(format!("{what}[{r}][{c}]")))
                })
                .collect::<Result<Vec<K>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        bail!(Error::Parse(format!("{what}: ragged matrix")));
    }
    Ok(Matrix::from_rows(&rows)?)
}

fn morphism<K: Field>(
    what: &str,
    m: &MatrixSpec,
    field_order: u32,
    source: &GradedObject<K>,
    target: &GradedObject<K>,
) -> Result<GradedMorphism<K>> {
    let m = parse_matrix(what, m, field_order)?;
    GradedMorphism::new(source, target, m).with_context(|| format!("while loading {what}"))
}

/// Builds the category, objects, algebras and YD modules of a spec.
pub fn load<K: Field>(spec: &SpecFile) -> Result<Loaded<K>> {
    let fo = spec.required_field_order()?;
    let group = AbelianGroup::new(spec.group.invariant_factors.clone())?;
    let bichar = match &spec.bicharacter {
        Some(b) => Bicharacter::new(&group, b.root_order, b.exponent_matrix.clone())?,
        None => Bicharacter::trivial(&group),
    };
    let ctx = Context::new(fo, group.clone(), bichar)?;

    let mut objects = BTreeMap::new();
    for (name, basis) in &spec.objects {
        let basis = basis
            .iter()
            .map(|b| Ok((b.label.clone(), group.element(&b.degree)?)))
            .collect::<Result<Vec<_>>>()
            .with_context(|| format!("object {name}"))?;
        objects.insert(name.clone(), GradedObject::new(&ctx, basis)?);
    }

    let mut algebras = BTreeMap::new();
    let mut supplied = BTreeMap::new();
    for (name, a) in &spec.algebras {
        let h = if let Some(b) = &a.builtin {
            builtins::build::<K>(b, &a.params).with_context(|| format!("algebra {name}"))?
        } else {
            let cname = a
                .carrier
                .as_ref()
                .ok_or_else(|| anyhow!(Error::Parse(format!("algebra {name} needs a carrier or builtin"))))?;
            let h = objects
                .get(cname)
                .ok_or_else(|| anyhow!(Error::Parse(format!("algebra {name}: unknown object {cname:?}"))))?
                .clone();
            let hh = h.tensor(&h)?;
            let one = GradedObject::unit(&ctx);
            let need = |field: &Option<MatrixSpec>, what: &str| {
                field
                    .clone()
                    .ok_or_else(|| anyhow!(Error::Parse(format!("algebra {name} is missing {what}"))))
            };
            let m = morphism(&format!("{name}.m"), &need(&a.m, "m")?, fo, &hh, &h)?;
            let u = morphism(&format!("{name}.u"), &need(&a.u, "u")?, fo, &one, &h)?;
            let delta = morphism(&format!("{name}.delta"), &need(&a.delta, "delta")?, fo, &h, &hh)?;
            let eps = morphism(&format!("{name}.eps"), &need(&a.eps, "eps")?, fo, &h, &one)?;
            let b = BialgebraData::from_maps(h.clone(), m, u, delta, eps)?;
            match &a.antipode {
                Some(s) => {
                    let s = morphism(&format!("{name}.antipode"), s, fo, &h, &h)?;
                    supplied.insert(name.clone(), s.clone());
                    HopfAlgebraData::new(b, s)?
                }
                None => HopfAlgebraData::from_bialgebra(b).with_context(|| format!("antipode of {name}"))?,
            }
        };
        algebras.insert(name.clone(), Arc::new(h));
    }

    let mut yd_modules = BTreeMap::new();
    for (name, y) in &spec.yd_modules {
        let h = algebras
            .get(&y.hopf)
            .ok_or_else(|| anyhow!(Error::Parse(format!("YD module {name}: unknown algebra {:?}", y.hopf))))?
            .clone();
        let v = objects
            .get(&y.carrier)
            .ok_or_else(|| anyhow!(Error::Parse(format!("YD module {name}: unknown object {:?}", y.carrier))))?
            .clone();
        let hv = h.carrier().tensor(&v)?;
        let action = morphism(&format!("{name}.action"), &y.action, fo, &hv, &v)?;
        let coaction = morphism(&format!("{name}.coaction"), &y.coaction, fo, &v, &hv)?;
        yd_modules.insert(name.clone(), YDModuleData::new(h, v, action, coaction)?);
    }

    Ok(Loaded {
        ctx,
        objects,
        algebras,
        supplied_antipodes: supplied,
        yd_modules,
    })
}

pub fn matrix_to_spec<K: Field>(m: &Matrix<K>) -> MatrixSpec {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| Value::String(format_scalar(m.get(r, c)))).collect())
        .collect()
}

/// Exports a Hopf algebra as a self-contained spec with explicit matrices.
pub fn export_hopf<K: Field>(name: &str, h: &HopfAlgebraData<K>) -> SpecFile {
    let ctx = h.ctx();
    let group = ctx.group();
    let carrier = h.carrier();
    let basis = (0..carrier.dim())
        .map(|i| BasisVector {
            label: carrier.label(i).to_string(),
            degree: group.exponents(carrier.degree(i)).into_iter().map(i64::from).collect(),
        })
        .collect();
    let bichar = ctx.bicharacter();
    let mut spec = SpecFile {
        field: FieldSpec {
            cyclotomic_order: ctx.field_order(),
        },
        group: GroupSpec {
            invariant_factors: group.factors().to_vec(),
        },
        bicharacter: (!group.is_trivial()).then(|| BicharacterSpec {
            root_order: bichar.root_order(),
            exponent_matrix: bichar.exponents().to_vec(),
        }),
        ..Default::default()
    };
    let carrier_name = format!("{name}_carrier");
    spec.objects.insert(carrier_name.clone(), basis);
    spec.algebras.insert(
        name.to_string(),
        AlgebraSpec {
            carrier: Some(carrier_name),
            m: Some(matrix_to_spec(h.m().matrix())),
            u: Some(matrix_to_spec(h.u().matrix())),
            delta: Some(matrix_to_spec(h.delta().matrix())),
            eps: Some(matrix_to_spec(h.eps().matrix())),
            antipode: Some(matrix_to_spec(h.s().matrix())),
            ..Default::default()
        },
    );
    spec
}
