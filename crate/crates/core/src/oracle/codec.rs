use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::instance::*;
use super::{LevelSetOracle, Oracle};
use crate::error::{Error, Result};
use crate::ff::{Field, MultiPoly, PolyJson};
use crate::group::{Action, ActionKind, Group, GroupDescriptor, Subgroup};

/// Hidden answers, kept apart from the public part of a serialized instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HarnessSection {
    pub hidden: Value,
}

/// Serialized instance: public parameters, an optional label-scrambling
/// seed, and the harness-only hidden answer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub family: Family,
    pub params: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scramble_seed: Option<u64>,
    pub harness: HarnessSection,
}

fn action_name(kind: ActionKind) -> &'static str {
    match kind {
        ActionKind::Regular => "regular",
        ActionKind::Kernel => "kernel",
        ActionKind::Shifting => "shifting",
    }
}

fn parse<T: for<'de> Deserialize<'de>>(v: &Value, key: &str) -> Result<T> {
    let field = v
        .get(key)
        .ok_or_else(|| Error::Parse(format!("missing \"{key}\"")))?;
    serde_json::from_value(field.clone()).map_err(|e| Error::Parse(format!("\"{key}\": {e}")))
}

impl<O: Oracle> ProblemInstance<O> {
    pub fn to_json(&self, scramble_seed: Option<u64>) -> InstanceJson {
        let params = match &self.setting {
            Setting::Group { action } => json!({
                "group": action.group().descriptor(),
                "action": action_name(action.kind()),
            }),
            Setting::Field { field, n, d } => json!({"q": field.q(), "n": n, "d": d}),
        };
        let hidden = match self.hidden() {
            Hidden::Subgroup(h) => json!({"subgroup": h.elements()}),
            Hidden::QuadraticShift { u } => json!({"u": u.value()}),
            Hidden::Polynomial(p) => json!({"poly": p.to_json()}),
            Hidden::GroverTarget { c, .. } => json!({"c": c.value()}),
            Hidden::ZpmzpVector { v, .. } => json!({"v": v}),
        };
        InstanceJson {
            family: self.family,
            params,
            scramble_seed,
            harness: HarnessSection { hidden },
        }
    }
}

impl InstanceJson {
    /// Rebuild the instance, re-validating its promise.
    pub fn build(&self) -> Result<ProblemInstance<LevelSetOracle>> {
        let p = &self.params;
        let h = &self.harness.hidden;
        match self.family {
            Family::Hsp | Family::Hssp => {
                let desc: GroupDescriptor = parse(p, "group")?;
                let group = Arc::new(Group::from_descriptor(&desc)?);
                let els: Vec<usize> = parse(h, "subgroup")?;
                let sub = Subgroup::from_elements(&group, &els)?;
                if self.family == Family::Hsp {
                    return make_hsp_oracle(group, &sub);
                }
                let kind: String = parse(p, "action")?;
                let action = match kind.as_str() {
                    "regular" => Action::regular(group),
                    "kernel" => Action::kernel(group),
                    "shifting" => Action::shifting(group)?,
                    other => return Err(Error::Parse(format!("unknown action {other}"))),
                };
                make_hssp_oracle(action, &sub)
            }
            Family::Hqpp => {
                let field = Field::with_order(parse(p, "q")?)?;
                make_hqpp_oracle(&field, field.element(parse(h, "u")?)?)
            }
            Family::Hpp | Family::Hpgp => {
                let field = Field::with_order(parse(p, "q")?)?;
                let n: usize = parse(p, "n")?;
                let poly: PolyJson = parse(h, "poly")?;
                let poly = MultiPoly::from_json(&poly, Some(n))?;
                if poly.field() != &field {
                    return Err(Error::FieldMismatch);
                }
                if self.family == Family::Hpp {
                    make_hpp_oracle(&field, n, &poly)
                } else {
                    make_hpgp_oracle(&field, n, &poly, parse(p, "d")?)
                }
            }
            Family::GroverHssp => {
                let desc: GroupDescriptor = parse(p, "group")?;
                let GroupDescriptor::Affine { q, .. } = desc else {
                    return Err(Error::Parse("Grover instances live on an affine group".into()));
                };
                let field = Field::with_order(q)?;
                make_grover_oracle(&field, field.element(parse(h, "c")?)?)
            }
            Family::ZpmzpHsp => {
                let desc: GroupDescriptor = parse(p, "group")?;
                let GroupDescriptor::Zpmzp { p: prime, m, a } = desc else {
                    return Err(Error::Parse("expected a zpmzp group".into()));
                };
                make_zpmzp_oracle(prime, m, &a, &parse::<Vec<u32>>(h, "v")?)
            }
        }
    }
}
