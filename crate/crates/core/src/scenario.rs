//! Scenario files.
//!
//! ```json
//! {"mode": "natural", "E": [1, 0, 0], "B": [0, 0, 0], "rho": 0, "J": [0, 0, 0],
//!  "media": {"kind": "uniform", "eps": 1, "mu": 1}}
//! ```
//!
//! Optional keys: `D`, `H` (media fields; otherwise derived from `media`),
//! `u` (Esposito reference vector), `plane_wave` (`k`, `helicity`,
//! `amplitude`) added on top of the constant fields, and `frame`, the group
//! element `{"c0": [re, im], "c": [[re, im], ...]}` relating the rest frame
//! to the frame of evaluation.

use std::sync::Arc;

use nalgebra::{Vector3, Vector4};
use serde::{Deserialize, Serialize};

use crate::constitutive::{rest_relations, MediaSpec};
use crate::error::{Error, Result};
use crate::fields::{to_fh, to_rs, EMFields, Units};
use crate::linalg::pad3;
use crate::maxwell::{
    esposito_field, media_plane_wave, plane_wave, residual_esposito,
    transform_scenario, ConstantField, ConstantSource, Formulation, Helicity, PlaneWaveSpec,
    Residuals, Scenario,
    SpacetimeField, SumField,
};
use crate::so3c::GroupElement;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitMode {
    #[default]
    Natural,
    Si,
}

impl UnitMode {
    pub fn units(self) -> Units {
        match self {
            UnitMode::Natural => Units::natural(),
            UnitMode::Si => Units::si(),
        }
    }
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaneWaveEntry {
    pub k: [f64; 3],
    pub helicity: Helicity,
    #[serde(default = "one")]
    pub amplitude: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldScenario {
    #[serde(default)]
    pub mode: UnitMode,
    #[serde(rename = "E", default)]
    pub e: [f64; 3],
    #[serde(rename = "B", default)]
    pub b: [f64; 3],
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<[f64; 3]>,
    #[serde(rename = "H", default, skip_serializing_if = "Option::is_none")]
    pub h: Option<[f64; 3]>,
    #[serde(default)]
    pub rho: f64,
    #[serde(rename = "J", default)]
    pub j: [f64; 3],
    #[serde(default)]
    pub media: MediaSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane_wave: Option<PlaneWaveEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<GroupElement>,
}

impl Default for FieldScenario {
    fn default() -> Self {
        Self {
            mode: UnitMode::Natural,
            e: [0.0; 3],
            b: [0.0; 3],
            d: None,
            h: None,
            rho: 0.0,
            j: [0.0; 3],
            media: MediaSpec::vacuum(),
            u: None,
            plane_wave: None,
            frame: None,
        }
    }
}

impl FieldScenario {
    pub fn units(&self) -> Units {
        self.mode.units()
    }

    pub fn fields(&self) -> EMFields {
        let mut f = EMFields::new(Vector3::from(self.e), Vector3::from(self.b));
        f.d = self.d.map(Vector3::from);
        f.h = self.h.map(Vector3::from);
        f
    }

    pub fn source(&self) -> ConstantSource {
        ConstantSource::from_rho_current(self.rho, self.j, self.units().c)
    }

    fn is_vacuum(&self) -> bool {
        self.media == MediaSpec::vacuum() && self.d.is_none() && self.h.is_none()
    }

    /// Appends `g` after the current frame.
    pub fn with_frame(mut self, g: &GroupElement) -> Self {
        self.frame = Some(match &self.frame {
            Some(prev) => crate::so3c::compose(g, prev),
            None => g.clone(),
        });
        self
    }

    /// Rest-frame scenario: vacuum fields use the single RS column, any
    /// other medium the two-sector form.
    pub fn rest_scenario(&self) -> Result<Scenario> {
        self.media.validate()?;
        let units = self.units();
        let fields = self.fields();
        let source = Arc::new(self.source());
        let formulation = if self.is_vacuum() {
            let mut parts: Vec<Arc<dyn SpacetimeField>> =
                vec![Arc::new(ConstantField(to_rs(&fields, units.c).column()))];
            if let Some(pw) = &self.plane_wave {
                let spec = PlaneWaveSpec::circular(
                    Vector3::from(pw.k),
                    pw.helicity,
                    pw.amplitude,
                    MediaSpec::vacuum(),
                    units,
                )?;
                parts.push(Arc::new(plane_wave(&spec)?));
            }
            Formulation::Single(Arc::new(SumField(parts)))
        } else {
            // the inverse relations must exist for the medium to be usable
            rest_relations(&self.media)?;
            let fh = match (fields.d, fields.h) {
                (Some(_), Some(_)) => to_fh(&fields, &units)?,
                (None, None) => {
                    let (d, h) = self.media.apply_real(&fields.e, &fields.b, &units);
                    to_fh(&fields.with_media_fields(d, h), &units)?
                }
                (None, Some(_)) => return Err(Error::MissingField("D")),
                (Some(_), None) => return Err(Error::MissingField("H")),
            };
            let mn = crate::fields::mn_split(&fh);
            let mut m_parts: Vec<Arc<dyn SpacetimeField>> =
                vec![Arc::new(ConstantField(pad3(&mn.m)))];
            let mut n_parts: Vec<Arc<dyn SpacetimeField>> =
                vec![Arc::new(ConstantField(pad3(&mn.n)))];
            if let Some(pw) = &self.plane_wave {
                let (_, m, n) = media_plane_wave(
                    Vector3::from(pw.k),
                    pw.helicity,
                    pw.amplitude,
                    &self.media,
                    &units,
                )?;
                m_parts.push(Arc::new(m));
                n_parts.push(Arc::new(n));
            }
            Formulation::TwoSector {
                m: Arc::new(SumField(m_parts)),
                n: Arc::new(SumField(n_parts)),
            }
        };
        Ok(Scenario {
            fields: formulation,
            source,
            units,
        })
    }

    /// Scenario in the frame of evaluation.
    pub fn build(&self) -> Result<Scenario> {
        let rest = self.rest_scenario()?;
        Ok(match &self.frame {
            Some(g) => transform_scenario(&rest, g),
            None => rest,
        })
    }

    /// Residuals at the given points, in the Esposito form when `u` is set.
    pub fn residual(&self, points: &[crate::Point4]) -> Result<Residuals> {
        let scenario = self.build()?;
        match (&self.u, &scenario.fields) {
            (None, _) => scenario.residual(points),
            (Some(u), Formulation::Single(psi)) => {
                let u = Vector4::from(*u);
                let phi = esposito_field(psi.clone(), &u)?;
                residual_esposito(&phi, &u, scenario.source.as_ref(), points, &scenario.units)
            }
            (Some(_), Formulation::TwoSector { .. }) => Err(Error::Unsupported(
                "the Esposito form is available for vacuum scenarios only".into(),
            )),
        }
    }
}
