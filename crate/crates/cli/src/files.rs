//! JSON curve and patch files.
//!
//! ```json
//! {"alpha": 4, "beta": 6, "degree": 2, "control": [[0, 0], [1, 2], [3, 0]]}
//! {"alpha": 0, "beta": 0, "degrees": [1, 1], "control": [[[0,0,0],[0,1,0]], [[1,0,0],[1,1,1]]]}
//! ```

use serde::Deserialize;
use shifted_bezier::{Curve64, Knots64, Patch64, Point64};

use crate::error::CliError;
use crate::numfmt::fmt17;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveFile {
    alpha: f64,
    beta: f64,
    degree: usize,
    control: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PatchFile {
    alpha: f64,
    beta: f64,
    degrees: [usize; 2],
    control: Vec<Vec<Vec<f64>>>,
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {path}: {e}")))
}

pub fn parse_curve(text: &str) -> Result<Curve64, CliError> {
    let file: CurveFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("curve file: {e}")))?;
    if file.control.len() != file.degree + 1 {
        return Err(CliError::Parse(format!(
            "curve file: degree {} needs {} control points, found {}",
            file.degree,
            file.degree + 1,
            file.control.len()
        )));
    }
    let knots = Knots64::new(file.alpha, file.beta)?;
    let control = file.control.into_iter().map(Point64::new).collect();
    Ok(Curve64::new(knots, control)?)
}

pub fn parse_patch(text: &str) -> Result<Patch64, CliError> {
    let file: PatchFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("patch file: {e}")))?;
    let [m, n] = file.degrees;
    let shape_ok = file.control.len() == m + 1 && file.control.iter().all(|r| r.len() == n + 1);
    if !shape_ok {
        return Err(CliError::Parse(format!(
            "patch file: degrees ({m}, {n}) need a {}x{} control net",
            m + 1,
            n + 1
        )));
    }
    let knots = Knots64::new(file.alpha, file.beta)?;
    let net = file
        .control
        .into_iter()
        .map(|row| row.into_iter().map(Point64::new).collect())
        .collect();
    Ok(Patch64::new(knots, net)?)
}

pub(crate) fn coords_json(p: &Point64) -> String {
    let parts: Vec<String> = p.coords().iter().map(|&c| fmt17(c)).collect();
    format!("[{}]", parts.join(", "))
}

/// Serializes a curve in the same format [`parse_curve`] reads.
pub fn write_curve(curve: &Curve64) -> String {
    let mut s = String::new();
    s.push_str("{\n");
    s.push_str(&format!("  \"alpha\": {},\n", fmt17(*curve.knots().alpha())));
    s.push_str(&format!("  \"beta\": {},\n", fmt17(*curve.knots().beta())));
    s.push_str(&format!("  \"degree\": {},\n", curve.degree()));
    s.push_str("  \"control\": [\n");
    let rows: Vec<String> = curve
        .control()
        .iter()
        .map(|p| format!("    {}", coords_json(p)))
        .collect();
    s.push_str(&rows.join(",\n"));
    s.push_str("\n  ]\n}\n");
    s
}

pub fn write_patch(patch: &Patch64) -> String {
    let (m, n) = patch.degrees();
    let mut s = String::new();
    s.push_str("{\n");
    s.push_str(&format!("  \"alpha\": {},\n", fmt17(*patch.knots().alpha())));
    s.push_str(&format!("  \"beta\": {},\n", fmt17(*patch.knots().beta())));
    s.push_str(&format!("  \"degrees\": [{m}, {n}],\n"));
    s.push_str("  \"control\": [\n");
    let rows: Vec<String> = patch
        .net()
        .iter()
        .map(|row| {
            let pts: Vec<String> = row.iter().map(coords_json).collect();
            format!("    [{}]", pts.join(", "))
        })
        .collect();
    s.push_str(&rows.join(",\n"));
    s.push_str("\n  ]\n}\n");
    s
}
