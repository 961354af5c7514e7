//! File formats: body and scene descriptions (JSON), boundary clouds
//! (CSV and JSON), and query results (JSON).
//!
//! Cloud numbers are written with 17 significant digits so that reading a
//! file back reproduces the original `f64` values bit for bit on the same
//! platform.

use std::io::{BufRead, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::collide::ProximityResult;
use crate::cspace::Scene;
use crate::error::{Error, Result};
use crate::geom::{
    BodyInstance, ConvexBody, MatrixOps, SphericalParam, Superquadric2, Superquadric3, VectorOps,
};
use crate::mink::{BoundaryCloud, MinkMode};

/// On-disk body description.
///
/// `dim` selects 2 or 3; `semi_axes` has `dim` entries, `exponents` has
/// `dim - 1`. The linear map `M` defaults to the identity and `center` to
/// the origin.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BodyDef {
    pub dim: usize,
    pub semi_axes: Vec<f64>,
    pub exponents: Vec<f64>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<Vec<f64>>,
}

/// A placed body of either dimension, as read from a description file.
#[derive(Clone, Debug)]
pub enum AnyBody {
    D2(BodyInstance<Superquadric2>),
    D3(BodyInstance<Superquadric3>),
}

impl AnyBody {
    pub fn dim(&self) -> usize {
        match self {
            AnyBody::D2(_) => 2,
            AnyBody::D3(_) => 3,
        }
    }
}

fn typed_instance<B: ConvexBody>(def: &BodyDef) -> Result<BodyInstance<B>> {
    let dim = <B::Vec as VectorOps>::DIM;
    if def.semi_axes.len() != dim {
        return Err(Error::BodyFormat {
            field: "semi_axes".into(),
            message: format!("expected {dim} entries, got {}", def.semi_axes.len()),
        });
    }
    if def.exponents.len() != dim - 1 {
        return Err(Error::BodyFormat {
            field: "exponents".into(),
            message: format!("expected {} entries, got {}", dim - 1, def.exponents.len()),
        });
    }
    let shape = B::from_parts(&def.semi_axes, &def.exponents)?;
    let linear = match &def.m {
        Some(rows) => B::Mat::from_rows(rows)?,
        None => B::Mat::identity(),
    };
    let center = match &def.center {
        Some(c) if c.len() == dim => B::Vec::from_slice(c),
        Some(c) => {
            return Err(Error::BodyFormat {
                field: "center".into(),
                message: format!("expected {dim} entries, got {}", c.len()),
            })
        }
        None => B::Vec::zeros(),
    };
    BodyInstance::new(shape, linear, center)
}

/// Builds a placed body from a description, dispatching on `dim`.
pub fn body_from_def(def: &BodyDef) -> Result<AnyBody> {
    match def.dim {
        2 => Ok(AnyBody::D2(typed_instance(def)?)),
        3 => Ok(AnyBody::D3(typed_instance(def)?)),
        d => Err(Error::Dimension { expected: 2, got: d }),
    }
}

/// Reads a JSON body description from a file.
pub fn read_body_file(path: &Path) -> Result<AnyBody> {
    let text = std::fs::read_to_string(path)?;
    let def: BodyDef = serde_json::from_str(&text)?;
    body_from_def(&def)
}

/// On-disk scene description: a robot shape and a list of placed obstacles.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SceneDef {
    pub robot: BodyDef,
    pub obstacles: Vec<BodyDef>,
}

/// A scene of either dimension, as read from a description file.
#[derive(Clone, Debug)]
pub enum AnyScene {
    D2(Scene<Superquadric2>),
    D3(Scene<Superquadric3>),
}

fn typed_scene<B: ConvexBody>(def: &SceneDef) -> Result<Scene<B>> {
    let robot_instance = typed_instance::<B>(&def.robot)?;
    if *robot_instance.linear() != B::Mat::identity() {
        return Err(Error::SceneFormat(
            "robot must not carry a linear map `M`; its orientation is swept".into(),
        ));
    }
    if robot_instance.center().norm() != 0.0 {
        return Err(Error::SceneFormat(
            "robot must not carry a center; placements are the query variable".into(),
        ));
    }
    let obstacles = def
        .obstacles
        .iter()
        .map(typed_instance::<B>)
        .collect::<Result<Vec<_>>>()?;
    Scene::new(robot_instance.shape().clone(), obstacles)
}

/// Builds a typed scene from a description, requiring consistent dimensions.
pub fn scene_from_def(def: &SceneDef) -> Result<AnyScene> {
    for (i, o) in def.obstacles.iter().enumerate() {
        if o.dim != def.robot.dim {
            return Err(Error::SceneFormat(format!(
                "obstacle {i} has dim {}, robot has dim {}",
                o.dim, def.robot.dim
            )));
        }
    }
    match def.robot.dim {
        2 => Ok(AnyScene::D2(typed_scene(def)?)),
        3 => Ok(AnyScene::D3(typed_scene(def)?)),
        d => Err(Error::Dimension { expected: 2, got: d }),
    }
}

/// Reads a JSON scene description from a file.
pub fn read_scene_file(path: &Path) -> Result<AnyScene> {
    let text = std::fs::read_to_string(path)?;
    let def: SceneDef = serde_json::from_str(&text)?;
    scene_from_def(&def)
}

/// Output format for boundary clouds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CloudFormat {
    Csv,
    Json,
}

impl FromStr for CloudFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(CloudFormat::Csv),
            "json" => Ok(CloudFormat::Json),
            other => Err(Error::BodyFormat {
                field: "format".into(),
                message: format!("expected `csv` or `json`, got `{other}`"),
            }),
        }
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Renders a cloud as CSV: one header line (`phi0[,phi1],x0,x1[,x2],mode`)
/// and one line per point, numbers at 17 significant digits.
pub fn cloud_csv_string<B: ConvexBody>(cloud: &BoundaryCloud<B>) -> String {
    let dim = <B::Vec as VectorOps>::DIM;
    let mut out = String::new();
    for name in B::Param::column_names() {
        out.push_str(name);
        out.push(',');
    }
    for j in 0..dim {
        out.push_str(&format!("x{j},"));
    }
    out.push_str("mode\n");
    for (phi, x) in cloud.params.iter().zip(&cloud.points) {
        for c in phi.components() {
            out.push_str(&fmt_f64(c));
            out.push(',');
        }
        for &c in x.as_slice() {
            out.push_str(&fmt_f64(c));
            out.push(',');
        }
        out.push_str(&cloud.query.mode.to_string());
        out.push('\n');
    }
    out
}

/// Writes a cloud to any writer in the chosen format.
pub fn write_cloud<B: ConvexBody, W: Write>(
    cloud: &BoundaryCloud<B>,
    format: CloudFormat,
    w: &mut W,
) -> Result<()> {
    match format {
        CloudFormat::Csv => w.write_all(cloud_csv_string(cloud).as_bytes())?,
        CloudFormat::Json => serde_json::to_writer_pretty(w, &cloud_json(cloud))?,
    }
    Ok(())
}

/// Writes a cloud to a file in the chosen format.
pub fn save_cloud<B: ConvexBody>(
    cloud: &BoundaryCloud<B>,
    format: CloudFormat,
    path: &Path,
) -> Result<()> {
    let mut file = std::fs::File::create(path)?;
    write_cloud(cloud, format, &mut file)
}

/// JSON mirror of the CSV cloud layout.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CloudData {
    pub mode: MinkMode,
    pub params: Vec<Vec<f64>>,
    pub points: Vec<Vec<f64>>,
}

/// Converts a cloud to its JSON mirror.
pub fn cloud_json<B: ConvexBody>(cloud: &BoundaryCloud<B>) -> CloudData {
    CloudData {
        mode: cloud.query.mode,
        params: cloud.params.iter().map(|p| p.components()).collect(),
        points: cloud.points.iter().map(|x| x.as_slice().to_vec()).collect(),
    }
}

/// Parses cloud CSV produced by [`cloud_csv_string`] back into raw data.
pub fn read_cloud_csv<R: BufRead>(reader: R) -> Result<CloudData> {
    let mut lines = reader.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::SceneFormat("cloud CSV is empty".into()))??;
    let columns: Vec<&str> = header.trim_end().split(',').collect();
    let n_phi = columns.iter().filter(|c| c.starts_with("phi")).count();
    let n_x = columns.iter().filter(|c| c.starts_with('x')).count();
    if n_phi == 0 || n_x == 0 || columns.last() != Some(&"mode") {
        return Err(Error::SceneFormat(format!("unrecognized cloud header `{header}`")));
    }

    let mut data = CloudData { mode: MinkMode::Contact, params: vec![], points: vec![] };
    let mut mode_seen: Option<MinkMode> = None;
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.trim_end().split(',').collect();
        if fields.len() != n_phi + n_x + 1 {
            return Err(Error::SceneFormat(format!(
                "cloud row {i} has {} fields, expected {}",
                fields.len(),
                n_phi + n_x + 1
            )));
        }
        let parse = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .map_err(|e| Error::SceneFormat(format!("cloud row {i}: bad number `{s}`: {e}")))
        };
        let phi = fields[..n_phi].iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
        let x =
            fields[n_phi..n_phi + n_x].iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
        let mode = MinkMode::from_str(fields[n_phi + n_x])?;
        if let Some(prev) = mode_seen {
            if prev != mode {
                return Err(Error::SceneFormat("cloud rows mix modes".into()));
            }
        }
        mode_seen = Some(mode);
        data.params.push(phi);
        data.points.push(x);
    }
    data.mode = mode_seen.unwrap_or(MinkMode::Contact);
    Ok(data)
}

/// CLI-facing JSON for a proximity query result.
pub fn proximity_json<B: ConvexBody>(result: &ProximityResult<B>) -> serde_json::Value {
    let vec_json =
        |v: &Option<B::Vec>| v.map(|v| v.as_slice().to_vec());
    json!({
        "status": result.status,
        "method": result.method,
        "lambda": result.lambda,
        "distance": result.distance,
        "witness1": vec_json(&result.witness1),
        "witness2": vec_json(&result.witness2),
        "iterations": result.solve.iterations,
    })
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;
    use nalgebra::Vector2;

    use super::*;
    use crate::collide::{proximity_query, QueryMethod};
    use crate::geom::GridSpec;
    use crate::mink::{boundary_cloud, MinkSumQuery};
    use crate::nls::SolverConfig;

    fn sample_cloud() -> BoundaryCloud<Superquadric2> {
        let q = MinkSumQuery::canonical(
            Superquadric2::new(1.3, 0.6, 0.8).unwrap(),
            Superquadric2::new(0.9, 1.1, 1.4).unwrap(),
            MinkMode::Contact,
        );
        boundary_cloud(&q, &GridSpec::TwoD { n: 7 }).unwrap()
    }

    #[test]
    fn csv_round_trip_is_bit_exact() {
        let cloud = sample_cloud();
        let text = cloud_csv_string(&cloud);
        let back = read_cloud_csv(text.as_bytes()).unwrap();
        assert_eq!(back.mode, MinkMode::Contact);
        assert_eq!(back.points.len(), cloud.points.len());
        for (row, p) in back.points.iter().zip(&cloud.points) {
            for (a, b) in row.iter().zip(p.as_slice()) {
                assert_eq!(a.to_bits(), b.to_bits());
            }
        }
        for (row, p) in back.params.iter().zip(&cloud.params) {
            for (a, b) in row.iter().zip(&p.components()) {
                assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }

    #[test]
    fn single_point_cloud_is_two_lines() {
        let q = MinkSumQuery::canonical(
            Superquadric2::circle(1.0).unwrap(),
            Superquadric2::circle(1.0).unwrap(),
            MinkMode::Contact,
        );
        let cloud = crate::mink::boundary_cloud_at(&q, vec![crate::geom::Param2::new(0.0)])
            .unwrap();
        let text = cloud_csv_string(&cloud);
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with("phi0,x0,x1,mode\n"));
    }

    #[test]
    fn json_mirror_round_trips() {
        let cloud = sample_cloud();
        let data = cloud_json(&cloud);
        let text = serde_json::to_string(&data).unwrap();
        let back: CloudData = serde_json::from_str(&text).unwrap();
        assert_eq!(back.points, data.points);
        assert_eq!(back.params, data.params);
        assert_eq!(back.mode, data.mode);
    }

    #[test]
    fn body_def_defaults_and_fields() {
        let def: BodyDef = serde_json::from_str(
            r#"{"dim":2,"semi_axes":[1.5,0.5],"exponents":[0.9]}"#,
        )
        .unwrap();
        let AnyBody::D2(body) = body_from_def(&def).unwrap() else {
            panic!("expected 2D body");
        };
        assert_eq!(*body.linear(), nalgebra::Matrix2::identity());
        assert_eq!(*body.center(), Vector2::zeros());
        assert_abs_diff_eq!(body.shape().semi_axes()[0], 1.5);
    }

    #[test]
    fn body_def_full_3d() {
        let def: BodyDef = serde_json::from_str(
            r#"{"dim":3,"semi_axes":[1,2,3],"exponents":[0.5,1.5],
                "M":[[1,0,0],[0,2,0],[0,0,1]],"center":[4,5,6]}"#,
        )
        .unwrap();
        let AnyBody::D3(body) = body_from_def(&def).unwrap() else {
            panic!("expected 3D body");
        };
        assert_eq!(body.center().z, 6.0);
        assert_eq!(body.linear()[(1, 1)], 2.0);
    }

    #[test]
    fn malformed_body_errors_name_the_field() {
        let def: BodyDef =
            serde_json::from_str(r#"{"dim":2,"semi_axes":[1.0],"exponents":[0.9]}"#).unwrap();
        let err = body_from_def(&def).unwrap_err().to_string();
        assert!(err.contains("semi_axes"), "error was: {err}");

        let def: BodyDef = serde_json::from_str(
            r#"{"dim":2,"semi_axes":[1.0,1.0],"exponents":[0.9],"M":[[1.0,0.0]]}"#,
        )
        .unwrap();
        let err = body_from_def(&def).unwrap_err().to_string();
        assert!(err.contains('M'), "error was: {err}");

        let def: BodyDef = serde_json::from_str(
            r#"{"dim":2,"semi_axes":[1.0,1.0],"exponents":[0.9],"center":[1.0,2.0,3.0]}"#,
        )
        .unwrap();
        let err = body_from_def(&def).unwrap_err().to_string();
        assert!(err.contains("center"), "error was: {err}");

        let def: BodyDef =
            serde_json::from_str(r#"{"dim":4,"semi_axes":[1.0],"exponents":[0.9]}"#).unwrap();
        assert!(matches!(body_from_def(&def), Err(Error::Dimension { got: 4, .. })));
    }

    #[test]
    fn scene_requires_plain_robot_and_consistent_dims() {
        let scene: SceneDef = serde_json::from_str(
            r#"{"robot":{"dim":2,"semi_axes":[0.5,0.5],"exponents":[1.0]},
                "obstacles":[{"dim":2,"semi_axes":[1.0,1.0],"exponents":[1.0],"center":[3.0,0.0]}]}"#,
        )
        .unwrap();
        assert!(matches!(scene_from_def(&scene), Ok(AnyScene::D2(_))));

        let mut with_m = scene.clone();
        with_m.robot.m = Some(vec![vec![2.0, 0.0], vec![0.0, 1.0]]);
        assert!(scene_from_def(&with_m).is_err());

        let mut mixed = scene.clone();
        mixed.obstacles[0].dim = 3;
        assert!(scene_from_def(&mixed).is_err());
    }

    #[test]
    fn proximity_json_has_contract_keys() {
        let c = Superquadric2::circle(1.0).unwrap();
        let q = MinkSumQuery::contact(
            BodyInstance::canonical(c),
            BodyInstance::canonical(c).with_center(Vector2::new(3.0, 0.0)),
        );
        let out = proximity_query(&q, QueryMethod::Normal, &SolverConfig::default()).unwrap();
        let v = proximity_json(&out);
        assert_eq!(v["status"], "separated");
        assert_eq!(v["method"], "normal");
        assert!(v["distance"].as_f64().unwrap() > 0.0);
        assert!(v["witness1"].is_array());
        assert!(v["iterations"].is_u64());
        assert!((v["lambda"].as_f64().unwrap() - 1.5).abs() < 1e-9);
    }
}
