//! Command-line front end.
//!
//! Subcommands: `analyze`, `fjrw`, `cr`, `verify-lgcy`, `mirror`,
//! `verify-mirror`, `diagram`. Verification failures exit with code 2,
//! usage and validation errors with code 1.

use crate::diagram::{build_diagram, cross_check, match_internal_to_empty};
use crate::error::{Error, Result};
use crate::mirror::{dual_group, verify_mirror};
use crate::parse::{parse_group, parse_polynomial};
use crate::poly::{atomic_decomposition, PolyData};
use crate::rat::format_rat;
use crate::report::{
    charges_json, dim_entries, iso_rows, render_diamond, render_sector_table, state_space_sectors,
    CheckJson, ChecksJson, InputEcho, JsonReport, SectorJson,
};
use crate::state::{cr, fjrw, verify_isomorphism, StateSpace};
use crate::svg::render_diagram_svg;
use crate::symmetry::{cosets, j_element, SymmetryGroup};
use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "lgcy",
    about = "Exact bigraded state spaces of quasihomogeneous hypersurface \
             singularities, their orbifold quotients, and transpose mirrors",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Charges, weights, symmetry group and summand structure of a polynomial
    Analyze(CommonArgs),
    /// The singularity-side state space, sector by sector
    Fjrw(CommonArgs),
    /// The hypersurface-side orbifold cohomology, sector by sector
    Cr(CommonArgs),
    /// Check that the two state spaces agree bidegree by bidegree
    VerifyLgcy(CommonArgs),
    /// The transposed polynomial and the dual group
    Mirror(CommonArgs),
    /// Check the Hodge-number rotation across the transpose construction
    VerifyMirror(CommonArgs),
    /// Per-coset ray/dot diagrams, with the degree-preserving matching
    Diagram(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Polynomial expression, or a path to a file containing one
    #[arg(long)]
    poly: String,
    /// Group: J, SL, Aut, or "gens: a/b,c/d,...; ..."
    #[arg(long, default_value = "J")]
    group: String,
    /// Write the machine-readable report here
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write SVG output here (one file per coset for `diagram`)
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Bound on group enumeration
    #[arg(long, default_value_t = 1_000_000)]
    max_group_order: u64,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Analyze(a) => with_input(a, cmd_analyze),
        Command::Fjrw(a) => with_input(a, cmd_fjrw),
        Command::Cr(a) => with_input(a, cmd_cr),
        Command::VerifyLgcy(a) => with_input(a, cmd_verify_lgcy),
        Command::Mirror(a) => with_input(a, cmd_mirror),
        Command::VerifyMirror(a) => with_input(a, cmd_verify_mirror),
        Command::Diagram(a) => with_input(a, cmd_diagram),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

struct Input<'a> {
    args: &'a CommonArgs,
    poly_text: String,
    poly: PolyData,
    group: SymmetryGroup,
}

fn with_input(args: &CommonArgs, f: impl FnOnce(&Input) -> Result<()>) -> Result<()> {
    let poly_text = if Path::new(&args.poly).is_file() {
        std::fs::read_to_string(&args.poly)?.trim().to_string()
    } else {
        args.poly.clone()
    };
    let matrix = parse_polynomial(&poly_text)?;
    let poly = PolyData::new(matrix)?;
    if poly.charges.large_charge {
        eprintln!("warning: some charge exceeds 1/2");
    }
    let group = parse_group(&args.group, &poly, args.max_group_order)?;
    f(&Input {
        args,
        poly_text,
        poly,
        group,
    })
}

impl Input<'_> {
    fn echo(&self) -> InputEcho {
        InputEcho {
            poly: self.poly_text.clone(),
            group: self.args.group.trim().to_string(),
        }
    }

    fn emit_json(
        &self,
        sectors: Vec<SectorJson>,
        totals: &crate::state::BigradedDims,
        checks: ChecksJson,
    ) -> Result<()> {
        if let Some(path) = &self.args.json {
            let report = JsonReport {
                input: self.echo(),
                charges: charges_json(&self.poly.charges),
                sectors,
                totals: dim_entries(totals),
                checks,
            };
            std::fs::write(path, serde_json::to_string_pretty(&report)? + "\n")?;
        }
        Ok(())
    }

    fn print_space(&self, space: &StateSpace) {
        print!("{}", render_sector_table(space));
        println!("totals: {}", space.total);
        if self.poly.n_vars() >= 2 {
            if let Some(diamond) = render_diamond(&space.total, self.poly.n_vars() - 2) {
                println!("{diamond}");
            }
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(std::io::Error::other(e))
    }
}

fn cmd_analyze(input: &Input) -> Result<()> {
    let c = &input.poly.charges;
    println!("polynomial: {}", input.poly.matrix);
    println!(
        "weights: ({}) degree: {}",
        c.weights
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(","),
        c.degree
    );
    println!(
        "charges: {}",
        c.charges
            .iter()
            .map(|q| format!("{q}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("calabi-yau: {}", c.calabi_yau);
    println!(
        "group: order {} exponent {}",
        input.group.order(),
        input.group.exponent()
    );
    match atomic_decomposition(&input.poly.matrix) {
        Ok(dec) => println!("summands: {dec}"),
        Err(Error::NotInvertible(_)) => {
            println!("summands: not an invertible polynomial");
            let evidence = crate::milnor::check_isolated(
                &input.poly.matrix,
                &c.weights,
                c.degree,
                300,
            )?;
            println!(
                "isolated singularity: {}",
                match evidence {
                    crate::milnor::IsolationEvidence::SeriesAndOracle =>
                        "series terminates, slice ranks agree",
                    crate::milnor::IsolationEvidence::SeriesOnly =>
                        "series terminates (instance too large for slice ranks)",
                }
            );
        }
        Err(e) => return Err(e),
    }
    input.emit_json(Vec::new(), &Default::default(), ChecksJson::default())
}

fn cmd_fjrw(input: &Input) -> Result<()> {
    let space = fjrw(&input.poly, &input.group)?;
    input.print_space(&space);
    input.emit_json(
        state_space_sectors(&space),
        &space.total,
        ChecksJson::default(),
    )
}

fn cmd_cr(input: &Input) -> Result<()> {
    let space = cr(&input.poly, &input.group)?;
    input.print_space(&space);
    input.emit_json(
        state_space_sectors(&space),
        &space.total,
        ChecksJson::default(),
    )
}

fn diagram_check(
    input: &Input,
    cr_space: &StateSpace,
    fjrw_space: &StateSpace,
) -> Result<(CheckJson, usize)> {
    let j = j_element(&input.poly.charges);
    let coset_list = cosets(&input.group, &j)?;
    let mut diffs = Vec::new();
    let mut matched_pairs = 0;
    for rep in &coset_list.representatives {
        let diagram = build_diagram(
            &input.poly.charges.weights,
            input.poly.charges.degree,
            rep,
        );
        if let Err(e) = cross_check(&diagram, cr_space, fjrw_space) {
            diffs.push(format!("coset {rep}: {e}"));
        }
        match match_internal_to_empty(&diagram) {
            Ok(pairs) => matched_pairs += pairs.len(),
            Err(e) => diffs.push(format!("coset {rep}: {e}")),
        }
    }
    Ok((
        CheckJson {
            pass: diffs.is_empty(),
            diffs,
        },
        matched_pairs,
    ))
}

fn cmd_verify_lgcy(input: &Input) -> Result<()> {
    let report = verify_isomorphism(&input.poly, &input.group)?;
    let (diagram, matched_pairs) = diagram_check(input, &report.cr, &report.fjrw)?;
    println!(
        "bidegrees compared: {} (total {} classes on the hypersurface side)",
        report.rows.len(),
        report.cr.total.total()
    );
    for (p, q, a, b) in &report.rows {
        let mark = if a == b { "ok" } else { "MISMATCH" };
        println!("  h^({p},{q}): hypersurface {a} singularity {b}  {mark}");
    }
    println!(
        "diagram cross-check: {} ({matched_pairs} hyperplane classes matched to scalar sectors)",
        if diagram.pass { "pass" } else { "fail" }
    );
    let mut sectors = state_space_sectors(&report.cr);
    sectors.extend(state_space_sectors(&report.fjrw));
    let checks = ChecksJson {
        iso: Some(CheckJson {
            pass: report.pass,
            diffs: iso_rows(&report.rows),
        }),
        diagram: Some(diagram.clone()),
        ..Default::default()
    };
    input.emit_json(sectors, &report.cr.total, checks)?;
    report.ensure()?;
    if !diagram.pass {
        return Err(Error::CrossCheckFailure(diagram.diffs.join("\n")));
    }
    println!("state spaces agree bidegree by bidegree");
    Ok(())
}

fn cmd_mirror(input: &Input) -> Result<()> {
    let transpose = input.poly.matrix.transpose()?;
    let transpose_data = PolyData::new(transpose)?;
    let dual = dual_group(&input.poly.matrix, &input.group, input.args.max_group_order)?;
    println!("transpose: {}", transpose_data.matrix);
    println!(
        "transpose weights: ({}) degree: {}",
        transpose_data
            .charges
            .weights
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(","),
        transpose_data.charges.degree
    );
    println!("dual group: order {}", dual.order());
    for g in dual.generators() {
        println!("  generator {}", format_generator(g));
    }
    if let Some(path) = &input.args.json {
        let report = JsonReport {
            input: input.echo(),
            charges: charges_json(&transpose_data.charges),
            sectors: Vec::new(),
            totals: Vec::new(),
            checks: ChecksJson::default(),
        };
        std::fs::write(path, serde_json::to_string_pretty(&report)? + "\n")?;
    }
    Ok(())
}

fn cmd_verify_mirror(input: &Input) -> Result<()> {
    let report = verify_mirror(&input.poly, &input.group, input.args.max_group_order)?;
    println!("transpose: {}", report.transpose.matrix);
    println!("dual group order: {}", report.dual.order());
    println!(
        "orbifold tables: {} vs {} classes",
        report.cr.total.total(),
        report.cr_transpose.total.total()
    );
    for line in &report.diffs {
        println!("  MISMATCH {line}");
    }
    let checks = ChecksJson {
        mirror: Some(CheckJson {
            pass: report.pass,
            diffs: report.diffs.clone(),
        }),
        ..Default::default()
    };
    input.emit_json(Vec::new(), &report.cr.total, checks)?;
    report.ensure()?;
    println!("mirror rotation holds on both tables");
    Ok(())
}

fn cmd_diagram(input: &Input) -> Result<()> {
    let cr_space = cr(&input.poly, &input.group)?;
    let fjrw_space = fjrw(&input.poly, &input.group)?;
    let j = j_element(&input.poly.charges);
    let coset_list = cosets(&input.group, &j)?;
    let mut diffs = Vec::new();
    for (i, rep) in coset_list.representatives.iter().enumerate() {
        let diagram = build_diagram(
            &input.poly.charges.weights,
            input.poly.charges.degree,
            rep,
        );
        let matching = match_internal_to_empty(&diagram)?;
        println!(
            "coset {i}: g={rep} rays={} dots={} empty rays={} matched pairs={}",
            diagram.rays.len(),
            diagram.dots.len(),
            diagram.empty_rays().len(),
            matching.len()
        );
        if let Err(e) = cross_check(&diagram, &cr_space, &fjrw_space) {
            diffs.push(format!("coset {rep}: {e}"));
        }
        if let Some(base) = &input.args.svg {
            let path = coset_svg_path(base, i);
            std::fs::write(&path, render_diagram_svg(&diagram))?;
            println!("  wrote {}", path.display());
        }
    }
    let check = CheckJson {
        pass: diffs.is_empty(),
        diffs: diffs.clone(),
    };
    let mut sectors = state_space_sectors(&cr_space);
    sectors.extend(state_space_sectors(&fjrw_space));
    input.emit_json(
        sectors,
        &cr_space.total,
        ChecksJson {
            diagram: Some(check),
            ..Default::default()
        },
    )?;
    if !diffs.is_empty() {
        return Err(Error::CrossCheckFailure(diffs.join("\n")));
    }
    Ok(())
}

fn coset_svg_path(base: &Path, index: usize) -> PathBuf {
    let stem = base
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "diagram".into());
    let name = format!("{stem}-coset{index}.svg");
    base.with_file_name(name)
}

/// Formats a phase vector as the group-spec grammar accepts it.
pub fn format_generator(g: &crate::symmetry::PhaseVector) -> String {
    g.phases()
        .iter()
        .map(format_rat)
        .collect::<Vec<_>>()
        .join(",")
}
