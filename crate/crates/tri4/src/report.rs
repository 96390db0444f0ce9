//! Analysis reports with a stable JSON schema (`report_version` 1).
//!
//! Field order is fixed by the struct definitions, histograms use ordered
//! maps, and decimal values are rendered as strings with 17 significant
//! digits, so serializing the same triangulation twice yields identical
//! bytes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::core4::Triangulation4;
use crate::iso::signature;
use crate::link3::Triangulation3;
use crate::surface2::TriangulatedSurface;
use crate::tri::{NotClosed, ReturnClass};

pub const REPORT_VERSION: u32 = 1;

#[derive(Serialize, Debug, Clone)]
pub struct TriangulationBlock {
    pub dimension: usize,
    pub simplices: usize,
    pub gluings: usize,
    pub closed: bool,
    pub connected: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct ValidityBlock {
    pub closed: bool,
    pub unpaired: Vec<(usize, u8)>,
    pub involution_consistent: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct ReturnClassCounts {
    pub identity: usize,
    pub transposition: usize,
    pub three_cycle: usize,
}

#[derive(Serialize, Debug, Clone)]
pub struct CycleBlock {
    pub count: usize,
    pub lengths: BTreeMap<usize, usize>,
    pub return_classes: ReturnClassCounts,
}

#[derive(Serialize, Debug, Clone)]
pub struct VolumeBlock {
    pub pi_squared_coefficient: String,
    pub decimal: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct EulerBlock {
    pub value: String,
    pub integer: bool,
    /// `false` flags the arithmetic obstruction: a non-integer Euler
    /// characteristic rules out 6-valence with trivial returns.
    pub six_valent_possible: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct SurfaceReport {
    pub triangles: usize,
    pub chi: i64,
    pub orientable: bool,
    pub class: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct CertificateReport {
    pub tetrahedral: bool,
    pub all_valence_six: bool,
    pub all_returns_trivial: bool,
    pub orientable: bool,
    pub num_cusps: usize,
    pub cusp_surfaces: Vec<String>,
    pub volume: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct BoundaryComponentReport {
    pub vertex_class: usize,
    pub size: usize,
    pub tetrahedra: usize,
    pub certificate: CertificateReport,
    pub signature: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct CuspReport {
    pub edge_class: usize,
    pub size: usize,
    pub surface: SurfaceReport,
}

/// Full analysis of a closed 4-dimensional triangulation.
#[derive(Serialize, Debug, Clone)]
pub struct AnalysisReport {
    pub report_version: u32,
    pub triangulation: TriangulationBlock,
    pub validity: ValidityBlock,
    pub face_cycles: CycleBlock,
    pub six_valent: bool,
    pub manifold: bool,
    pub orientable: bool,
    pub volume: VolumeBlock,
    pub euler_characteristic: EulerBlock,
    pub boundary_components: Vec<BoundaryComponentReport>,
    pub cusps: Vec<CuspReport>,
}

/// Analysis of a closed ideal 3-dimensional triangulation.
#[derive(Serialize, Debug, Clone)]
pub struct Analysis3Report {
    pub report_version: u32,
    pub triangulation: TriangulationBlock,
    pub edge_cycles: CycleBlock,
    pub certificate: CertificateReport,
    pub cusps: Vec<Cusp3Report>,
    pub signature: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct Cusp3Report {
    pub vertex_class: usize,
    pub size: usize,
    pub surface: SurfaceReport,
}

fn cycle_block<const V: usize>(cycles: &[crate::tri::RidgeCycle<V>]) -> CycleBlock {
    let mut lengths = BTreeMap::new();
    let mut counts = ReturnClassCounts {
        identity: 0,
        transposition: 0,
        three_cycle: 0,
    };
    for c in cycles {
        *lengths.entry(c.len()).or_insert(0) += 1;
        match c.return_class() {
            ReturnClass::Identity => counts.identity += 1,
            ReturnClass::Transposition => counts.transposition += 1,
            ReturnClass::ThreeCycle => counts.three_cycle += 1,
        }
    }
    CycleBlock {
        count: cycles.len(),
        lengths,
        return_classes: counts,
    }
}

fn surface_report(s: &TriangulatedSurface) -> SurfaceReport {
    SurfaceReport {
        triangles: s.num_triangles(),
        chi: s.euler_characteristic().expect("closed surface"),
        orientable: s.orientable().expect("closed surface"),
        class: s.classify().expect("closed surface").to_string(),
    }
}

fn certificate_report(t3: &Triangulation3) -> CertificateReport {
    let cert = t3
        .tetrahedral_certificate()
        .expect("links of closed triangulations are closed");
    CertificateReport {
        tetrahedral: cert.granted(),
        all_valence_six: cert.all_valence_six,
        all_returns_trivial: cert.all_returns_trivial,
        orientable: cert.orientable,
        num_cusps: cert.num_cusps,
        cusp_surfaces: cert.cusp_surfaces.iter().map(|c| c.to_string()).collect(),
        volume: t3.volume_decimal().expect("closed"),
    }
}

/// Builds the full report; fails with the unpaired-slot list when the
/// triangulation is not closed.
pub fn analyze4(t: &Triangulation4) -> Result<AnalysisReport, NotClosed> {
    let cycles = t.face_cycles()?;
    let validation = t.validate();
    let volume = t.exact_volume()?;
    let chi = t.euler_characteristic()?;
    let six_valent = cycles.iter().all(|c| c.len() == 6);
    let manifold = cycles
        .iter()
        .all(|c| c.return_class() == ReturnClass::Identity);

    let boundary_components = t
        .vertex_classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let link = t.vertex_link(class).expect("class from the partition");
            BoundaryComponentReport {
                vertex_class: i,
                size: class.len(),
                tetrahedra: link.num_simplices(),
                certificate: certificate_report(&link),
                signature: signature(&link),
            }
        })
        .collect();

    let cusps = t
        .edge_classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let surface = t.cusp_surface(class).expect("class from the partition");
            CuspReport {
                edge_class: i,
                size: class.len(),
                surface: surface_report(&surface),
            }
        })
        .collect();

    Ok(AnalysisReport {
        report_version: REPORT_VERSION,
        triangulation: TriangulationBlock {
            dimension: 4,
            simplices: t.num_simplices(),
            gluings: t.num_gluings(),
            closed: true,
            connected: t.is_connected(),
        },
        validity: ValidityBlock {
            closed: validation.closed,
            unpaired: validation
                .unpaired
                .iter()
                .map(|s| (s.simplex, s.facet))
                .collect(),
            involution_consistent: validation.involution_consistent,
        },
        face_cycles: cycle_block(&cycles),
        six_valent,
        manifold,
        orientable: t.orientability().is_some(),
        volume: VolumeBlock {
            pi_squared_coefficient: volume.coefficient.to_string(),
            decimal: volume.decimal(),
        },
        euler_characteristic: EulerBlock {
            value: chi.to_string(),
            integer: chi.is_integer(),
            six_valent_possible: chi.is_integer(),
        },
        boundary_components,
        cusps,
    })
}

pub fn analyze3(t: &Triangulation3) -> Result<Analysis3Report, NotClosed> {
    let cycles = t.edge_cycles()?;
    let cusps = t
        .vertex_classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let surface = t
                .cusp_link_surface(class)
                .expect("class from the partition");
            Cusp3Report {
                vertex_class: i,
                size: class.len(),
                surface: surface_report(&surface),
            }
        })
        .collect();
    Ok(Analysis3Report {
        report_version: REPORT_VERSION,
        triangulation: TriangulationBlock {
            dimension: 3,
            simplices: t.num_simplices(),
            gluings: t.num_gluings(),
            closed: true,
            connected: t.is_connected(),
        },
        edge_cycles: cycle_block(&cycles),
        certificate: certificate_report(t),
        cusps,
        signature: signature(t),
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let t = &self.triangulation;
        writeln!(
            out,
            "4-dimensional triangulation: {} simplices, {} gluings, closed, {}",
            t.simplices,
            t.gluings,
            if t.connected { "connected" } else { "disconnected" }
        )
        .unwrap();
        let lengths: Vec<String> = self
            .face_cycles
            .lengths
            .iter()
            .map(|(len, count)| format!("{count} of length {len}"))
            .collect();
        writeln!(
            out,
            "face cycles: {} ({})",
            self.face_cycles.count,
            lengths.join(", ")
        )
        .unwrap();
        let rc = &self.face_cycles.return_classes;
        writeln!(
            out,
            "return maps: {} identity, {} transposition, {} three-cycle",
            rc.identity, rc.transposition, rc.three_cycle
        )
        .unwrap();
        writeln!(out, "six-valent: {}", self.six_valent).unwrap();
        writeln!(out, "manifold:   {}", self.manifold).unwrap();
        writeln!(out, "orientable: {}", self.orientable).unwrap();
        writeln!(
            out,
            "volume:     {} * pi^2 = {}",
            self.volume.pi_squared_coefficient, self.volume.decimal
        )
        .unwrap();
        writeln!(
            out,
            "euler characteristic: {}{}",
            self.euler_characteristic.value,
            if self.euler_characteristic.integer {
                ""
            } else {
                " (non-integer: cannot be 6-valent with trivial returns)"
            }
        )
        .unwrap();
        writeln!(out, "boundary components: {}", self.boundary_components.len()).unwrap();
        for b in &self.boundary_components {
            writeln!(
                out,
                "  class {}: {} tetrahedra, tetrahedral: {}, orientable: {}, cusps: {}, volume {}",
                b.vertex_class,
                b.tetrahedra,
                b.certificate.tetrahedral,
                b.certificate.orientable,
                b.certificate.num_cusps,
                b.certificate.volume
            )
            .unwrap();
        }
        writeln!(out, "cusps: {}", self.cusps.len()).unwrap();
        for c in &self.cusps {
            writeln!(
                out,
                "  class {}: {} triangles, {}",
                c.edge_class, c.size, c.surface.class
            )
            .unwrap();
        }
        out
    }
}

impl Analysis3Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let t = &self.triangulation;
        writeln!(
            out,
            "3-dimensional triangulation: {} tetrahedra, {} gluings, closed, {}",
            t.simplices,
            t.gluings,
            if t.connected { "connected" } else { "disconnected" }
        )
        .unwrap();
        let lengths: Vec<String> = self
            .edge_cycles
            .lengths
            .iter()
            .map(|(len, count)| format!("{count} of valence {len}"))
            .collect();
        writeln!(
            out,
            "edge classes: {} ({})",
            self.edge_cycles.count,
            lengths.join(", ")
        )
        .unwrap();
        writeln!(out, "tetrahedral: {}", self.certificate.tetrahedral).unwrap();
        writeln!(out, "orientable:  {}", self.certificate.orientable).unwrap();
        writeln!(out, "volume:      {}", self.certificate.volume).unwrap();
        writeln!(out, "cusps: {}", self.cusps.len()).unwrap();
        for c in &self.cusps {
            writeln!(
                out,
                "  class {}: {} triangles, {}",
                c.vertex_class, c.size, c.surface.class
            )
            .unwrap();
        }
        writeln!(out, "signature: {}", self.signature).unwrap();
        out
    }
}
