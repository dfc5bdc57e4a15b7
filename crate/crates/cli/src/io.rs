//! JSON file formats. Points are written as `[x, y]` pairs.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use orthowatch_core::{
    BalancedGroup, Decomposition, OrthoPolygon, PiecePlan, Point, PolygonClass, Route, RouteMetrics, TrimMode,
};
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonFile {
    pub vertices: Vec<[i64; 2]>,
}

impl PolygonFile {
    pub fn from_polygon(p: &OrthoPolygon) -> Self {
        PolygonFile { vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect() }
    }

    pub fn to_polygon(&self) -> Result<OrthoPolygon> {
        let pts: Vec<(i64, i64)> = self.vertices.iter().map(|v| (v[0], v[1])).collect();
        Ok(OrthoPolygon::new(&pts)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlabJson {
    pub i: usize,
    pub x: [i64; 2],
    pub l: i64,
    pub u: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub range: [usize; 2],
    pub m: i64,
    #[serde(rename = "M")]
    pub big_m: i64,
}

impl From<&BalancedGroup> for GroupJson {
    fn from(g: &BalancedGroup) -> Self {
        GroupJson { range: [g.first, g.last], m: g.lower_bound, big_m: g.upper_bound }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub slabs: Vec<SlabJson>,
    pub class: String,
    pub groups: Vec<GroupJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plan: Option<PiecePlan>,
}

impl DecompositionFile {
    pub fn new(d: &Decomposition, groups: &[BalancedGroup], plan: Option<PiecePlan>) -> Self {
        let slabs =
            d.slabs().iter().map(|s| SlabJson { i: s.index, x: [s.x_left, s.x_right], l: s.lower, u: s.upper }).collect();
        DecompositionFile {
            slabs,
            class: class_name(d.class()).to_string(),
            groups: groups.iter().map(GroupJson::from).collect(),
            plan,
        }
    }
}

pub fn class_name(c: PolygonClass) -> &'static str {
    match c {
        PolygonClass::Monotone => "monotone",
        PolygonClass::PathPolygon => "path",
        PolygonClass::Other => "other",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteFile {
    pub points: Vec<[i64; 2]>,
    #[serde(default)]
    pub bends: usize,
    #[serde(default)]
    pub length: i64,
    #[serde(default)]
    pub trim: TrimMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces: Option<PiecePlan>,
}

impl RouteFile {
    pub fn new(route: &Route, metrics: &RouteMetrics, pieces: Option<PiecePlan>) -> Self {
        RouteFile {
            points: route.points.iter().map(|p| [p.x, p.y]).collect(),
            bends: metrics.bends,
            length: metrics.length,
            trim: route.trim,
            pieces,
        }
    }

    pub fn to_route(&self) -> Route {
        Route { points: self.points.iter().map(|p| Point::new(p[0], p[1])).collect(), trim: self.trim }
    }
}

/// Reads a file, or standard input for `-` or no path.
pub fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Writes to a file, or standard output for `-` or no path.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(fs::write(p, text)?),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

pub fn parse_polygon(text: &str) -> Result<OrthoPolygon> {
    serde_json::from_str::<PolygonFile>(text)?.to_polygon()
}

pub fn parse_route(text: &str) -> Result<Route> {
    Ok(serde_json::from_str::<RouteFile>(text)?.to_route())
}

/// Compact JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string(v)?;
    s.push('\n');
    Ok(s)
}
