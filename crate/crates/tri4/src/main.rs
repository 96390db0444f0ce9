//! Command-line frontend: validation, analysis, link extraction,
//! isomorphism, signatures and built-in triangulations.
//!
//! Exit codes: 0 = success / property holds, 1 = property fails,
//! 2 = parse or structural error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use tri4::constructions::{build_cone_c, build_fig8, build_k6, build_triple_t};
use tri4::io::{self, AnyTriangulation};
use tri4::iso;
use tri4::report;

#[derive(Parser)]
#[command(name = "tri4", version, about = "Facet-pairing triangulations of 4-manifolds: validation, face cycles, boundary links, cusps, signatures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check structure and closedness of a tri3/tri4 file
    Validate { path: PathBuf },
    /// Analyze a triangulation: cycles, volumes, boundary components, cusps
    Analyze {
        path: PathBuf,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Write each vertex link of a tri4 file as a tri3 file
    Links {
        path: PathBuf,
        /// Output directory for the link files
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Test two files for combinatorial isomorphism
    Iso { path_a: PathBuf, path_b: PathBuf },
    /// Print the canonical signature of a triangulation
    Sig { path: PathBuf },
    /// Emit a built-in triangulation: fig8, coneC, tripleT or k6block
    Builtin {
        name: String,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_FAILS: u8 = 1;
const EXIT_ERROR: u8 = 2;

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn load(path: &Path) -> Result<AnyTriangulation, u8> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        EXIT_ERROR
    })?;
    io::parse_any(&text).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        EXIT_ERROR
    })
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Validate { path } => cmd_validate(&path),
        Command::Analyze { path, json } => cmd_analyze(&path, json),
        Command::Links { path, out_dir } => cmd_links(&path, &out_dir),
        Command::Iso { path_a, path_b } => cmd_iso(&path_a, &path_b),
        Command::Sig { path } => cmd_sig(&path),
        Command::Builtin { name, out } => cmd_builtin(&name, out.as_deref()),
    }
}

fn unpaired_list(unpaired: &[tri4::FacetSlot]) -> String {
    let entries: Vec<String> = unpaired.iter().map(|s| s.to_string()).collect();
    entries.join(", ")
}

fn cmd_validate(path: &Path) -> u8 {
    let any = match load(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let (dim, report) = match &any {
        AnyTriangulation::Dim3(t) => (3, t.validate()),
        AnyTriangulation::Dim4(t) => (4, t.validate()),
    };
    println!(
        "{}-dimensional triangulation: {} simplices, {} gluings",
        dim, report.num_simplices, report.num_gluings
    );
    println!("involution consistent: {}", report.involution_consistent);
    if report.closed {
        println!("closed: true");
        EXIT_OK
    } else {
        println!("closed: false");
        println!("unpaired facets: {}", unpaired_list(&report.unpaired));
        EXIT_FAILS
    }
}

fn cmd_analyze(path: &Path, json: bool) -> u8 {
    let any = match load(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    match any {
        AnyTriangulation::Dim4(t) => match report::analyze4(&t) {
            Ok(r) => {
                if json {
                    println!("{}", r.to_json());
                } else {
                    print!("{}", r.to_text());
                }
                EXIT_OK
            }
            Err(nc) => {
                eprintln!(
                    "not closed: unpaired facets: {}",
                    unpaired_list(&nc.unpaired)
                );
                EXIT_FAILS
            }
        },
        AnyTriangulation::Dim3(t) => match report::analyze3(&t) {
            Ok(r) => {
                if json {
                    println!("{}", r.to_json());
                } else {
                    print!("{}", r.to_text());
                }
                EXIT_OK
            }
            Err(nc) => {
                eprintln!(
                    "not closed: unpaired faces: {}",
                    unpaired_list(&nc.unpaired)
                );
                EXIT_FAILS
            }
        },
    }
}

fn signature_hash(sig: &str) -> String {
    let digest = Sha256::digest(sig.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect::<String>()[..12].to_string()
}

fn cmd_links(path: &Path, out_dir: &Path) -> u8 {
    let any = match load(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let AnyTriangulation::Dim4(t) = any else {
        eprintln!("links requires a tri4 file");
        return EXIT_ERROR;
    };
    if let Err(e) = std::fs::create_dir_all(out_dir) {
        eprintln!("{}: {e}", out_dir.display());
        return EXIT_ERROR;
    }
    for (i, class) in t.vertex_classes().iter().enumerate() {
        let link = match t.vertex_link(class) {
            Ok(link) => link,
            Err(e) => {
                eprintln!("vertex class {i}: {e}");
                return EXIT_ERROR;
            }
        };
        let sig = iso::signature(&link);
        let file = out_dir.join(format!("link{}_{}.tri3", i, signature_hash(&sig)));
        if let Err(e) = std::fs::write(&file, io::write_tri3(&link)) {
            eprintln!("{}: {e}", file.display());
            return EXIT_ERROR;
        }
        println!(
            "{} ({} tetrahedra, vertex class of size {})",
            file.display(),
            link.num_simplices(),
            class.len()
        );
    }
    EXIT_OK
}

fn cmd_iso(path_a: &Path, path_b: &Path) -> u8 {
    let (a, b) = match (load(path_a), load(path_b)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return EXIT_ERROR,
    };
    match (a, b) {
        (AnyTriangulation::Dim3(a), AnyTriangulation::Dim3(b)) => report_iso(iso::isomorphic(&a, &b)),
        (AnyTriangulation::Dim4(a), AnyTriangulation::Dim4(b)) => report_iso(iso::isomorphic(&a, &b)),
        _ => {
            eprintln!("dimension mismatch: one file is tri3, the other tri4");
            EXIT_ERROR
        }
    }
}

fn report_iso<const V: usize>(result: Option<iso::Isomorphism<V>>) -> u8 {
    match result {
        Some(iso) => {
            println!("isomorphic");
            for (s, (&t, p)) in iso.simplex_map.iter().zip(&iso.label_maps).enumerate() {
                println!("  simplex {s} -> {t} via {p}");
            }
            println!("orientation effect: {:?}", iso.orientation_effect);
            EXIT_OK
        }
        None => {
            println!("not isomorphic");
            EXIT_FAILS
        }
    }
}

fn cmd_sig(path: &Path) -> u8 {
    let any = match load(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let sig = match &any {
        AnyTriangulation::Dim3(t) => iso::signature(t),
        AnyTriangulation::Dim4(t) => iso::signature(t),
    };
    println!("{sig}");
    EXIT_OK
}

fn cmd_builtin(name: &str, out: Option<&Path>) -> u8 {
    let text = match name {
        "fig8" => io::write_tri3(&build_fig8()),
        "coneC" => io::write_tri4(&build_cone_c()),
        "tripleT" => io::write_tri4(&build_triple_t(3)),
        "k6block" => io::write_tri4(&build_k6()),
        other => {
            eprintln!("unknown builtin `{other}` (expected fig8, coneC, tripleT or k6block)");
            return EXIT_ERROR;
        }
    };
    match out {
        None => {
            print!("{text}");
            EXIT_OK
        }
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                EXIT_ERROR
            }
        },
    }
}
