//! wasm-bindgen bindings for the demo page in `www/`. Each export takes
//! plain strings and numbers and returns JSON text; errors come back as a
//! thrown string.

use padic_serre::case::frobenius_entry;
use padic_serre::characters::DirichletCharacter;
use padic_serre::poly::{cycle_type_mod_ell, newton_polygon, parse_poly_json};
use padic_serre::rep3a6::Fine5;
use padic_serre::weights::{predicted_weights, InertiaProfile};
use wasm_bindgen::prelude::*;

pub mod ops {
    use super::*;

    fn to_json<T: serde::Serialize>(v: &T) -> Result<String, String> {
        serde_json::to_string(v).map_err(|e| e.to_string())
    }

    /// Newton polygon of a JSON coefficient list (constant term first).
    pub fn polygon(poly_json: &str, p: u64) -> Result<String, String> {
        let f = parse_poly_json(poly_json).map_err(|e| e.to_string())?;
        to_json(&newton_polygon(&f, p).map_err(|e| e.to_string())?)
    }

    /// Predicted weights for an inertia profile in JSON.
    pub fn weights(profile_json: &str, p: u64) -> Result<String, String> {
        let prof: InertiaProfile = serde_json::from_str(profile_json).map_err(|e| e.to_string())?;
        to_json(&predicted_weights(&prof, p).map_err(|e| e.to_string())?)
    }

    /// Frobenius class and det(1 - t rho(Frob)) at ell. The cycle type is
    /// either "5,1"-style text or computed from `sextic_json` when empty.
    #[allow(clippy::too_many_arguments)]
    pub fn frobenius(
        p: u64,
        ell: u64,
        cycle_type: &str,
        sextic_json: &str,
        artin_power: Option<i64>,
        residue_degree: Option<u32>,
        fine: &str,
        nebentype: &str,
    ) -> Result<String, String> {
        let ct: Vec<u32> = if cycle_type.trim().is_empty() {
            let t = parse_poly_json(sextic_json).map_err(|e| e.to_string())?;
            cycle_type_mod_ell(&t, ell).map_err(|e| e.to_string())?
        } else {
            cycle_type
                .split(',')
                .map(|s| s.trim().parse::<u32>().map_err(|_| format!("bad cycle type {cycle_type:?}")))
                .collect::<Result<_, _>>()?
        };
        let fine = match fine.trim() {
            "" => None,
            "5a" => Some(Fine5::A),
            "5b" => Some(Fine5::B),
            other => return Err(format!("fine class must be 5a or 5b, got {other:?}")),
        };
        let chi: DirichletCharacter = nebentype.parse().map_err(|e: padic_serre::Error| e.to_string())?;
        let eps = chi.eval(ell as i64).map_err(|e| e.to_string())?;
        to_json(&frobenius_entry(p, ell, &ct, eps, fine, artin_power, residue_degree).map_err(|e| e.to_string())?)
    }
}

#[wasm_bindgen]
pub fn polygon(poly_json: &str, p: u32) -> Result<String, JsValue> {
    ops::polygon(poly_json, u64::from(p)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn weights(profile_json: &str, p: u32) -> Result<String, JsValue> {
    ops::weights(profile_json, u64::from(p)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn frobenius(
    p: u32,
    ell: u32,
    cycle_type: &str,
    sextic_json: &str,
    artin_power: Option<i32>,
    residue_degree: Option<u32>,
    fine: &str,
    nebentype: &str,
) -> Result<String, JsValue> {
    ops::frobenius(
        u64::from(p),
        u64::from(ell),
        cycle_type,
        sextic_json,
        artin_power.map(i64::from),
        residue_degree,
        fine,
        nebentype,
    )
    .map_err(|e| JsValue::from_str(&e))
}
