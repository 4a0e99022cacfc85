//! Named instances shipped with the crate: field specs and complete job
//! configurations for the worked examples the acceptance suite reproduces.

use crate::config::JobConfig;
use crate::field::{load_field, FieldError, NumberField};

pub struct FieldPreset {
    pub name: &'static str,
    pub toml: &'static str,
}

pub const FIELD_PRESETS: &[FieldPreset] = &[
    FieldPreset {
        name: "rationals",
        toml: include_str!("../presets/fields/rationals.toml"),
    },
    FieldPreset {
        name: "gaussian",
        toml: include_str!("../presets/fields/gaussian.toml"),
    },
    FieldPreset {
        name: "eisenstein",
        toml: include_str!("../presets/fields/eisenstein.toml"),
    },
    FieldPreset {
        name: "gaussian_sqrt5",
        toml: include_str!("../presets/fields/gaussian_sqrt5.toml"),
    },
    FieldPreset {
        name: "eisenstein_omega7",
        toml: include_str!("../presets/fields/eisenstein_omega7.toml"),
    },
    FieldPreset {
        name: "gaussian_omega15",
        toml: include_str!("../presets/fields/gaussian_omega15.toml"),
    },
];

pub fn field(name: &str) -> Result<NumberField, FieldError> {
    let preset = FIELD_PRESETS
        .iter()
        .find(|p| p.name == name)
        .ok_or(FieldError::UnknownName {
            kind: "field preset",
            name: name.to_string(),
        })?;
    load_field(preset.toml)
}

pub struct JobPreset {
    pub name: &'static str,
    pub description: &'static str,
    pub toml: &'static str,
}

pub const JOB_PRESETS: &[JobPreset] = &[
    JobPreset {
        name: "quat_i_sqrt5",
        description: "nonassociative quaternion algebra (Q(i,sqrt5)/Q(i), sigma, phi) with \
                      natural order over Z[i,phi]; ideal (1+i), inert, residue F4; \
                      length-3 parity coset code",
        toml: include_str!("../presets/jobs/quat_i_sqrt5.toml"),
    },
    JobPreset {
        name: "cubic_omega7",
        description: "degree-3 nonassociative cyclic algebra (Q(w,theta7)/Q(w), sigma, theta7); \
                      ideal (2), inert, coefficient quotient F64 over F4",
        toml: include_str!("../presets/jobs/cubic_omega7.toml"),
    },
    JobPreset {
        name: "quartic_omega15",
        description: "degree-4 nonassociative cyclic algebra (Q(i,theta15)/Q(i), sigma, c) with \
                      c = theta^3 - 3 theta + 1; ideal (1+i), coefficient quotient F16 over F2; \
                      t^4 - c-bar reducible",
        toml: include_str!("../presets/jobs/quartic_omega15.toml"),
    },
    JobPreset {
        name: "quad_gauss",
        description: "nonassociative quaternion algebra (Q(i)/Q, conj, i) with natural order \
                      over Z[i]; ideal (3) inert; see quad_gauss_split for the split prime (5)",
        toml: include_str!("../presets/jobs/quad_gauss.toml"),
    },
    JobPreset {
        name: "quad_gauss_split",
        description: "same algebra as quad_gauss, reduced modulo the split prime (5): \
                      coefficient ring F5 x F5 with slot-permuting induced automorphism",
        toml: include_str!("../presets/jobs/quad_gauss_split.toml"),
    },
    JobPreset {
        name: "quad_gauss_two_primes",
        description: "same algebra as quad_gauss, reduced modulo (21) = (3)(7): quotient \
                      decomposes into two inert components F9 and F49",
        toml: include_str!("../presets/jobs/quad_gauss_two_primes.toml"),
    },
    JobPreset {
        name: "iterated_quat_omega7",
        description: "generalized cyclic algebra (D, sigma, w) over the quaternion algebra \
                      D = (Q(w,theta7)/Q(theta7), rho, -1); ideal (2): inner quotient is the \
                      split quaternion algebra over F8, coefficient quotient F64",
        toml: include_str!("../presets/jobs/iterated_quat_omega7.toml"),
    },
];

pub fn job(name: &str) -> Result<JobConfig, crate::Error> {
    let preset = JOB_PRESETS
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| crate::Error::Config(format!("unknown preset '{name}'")))?;
    crate::config::parse_job(preset.toml)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_field_presets_load() {
        for p in FIELD_PRESETS {
            let f = field(p.name).unwrap_or_else(|e| panic!("preset {} broken: {e}", p.name));
            assert_eq!(f.name, p.name);
        }
    }
}
