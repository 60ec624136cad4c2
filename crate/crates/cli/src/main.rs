//! `agmds`: build, certify and catalog MDS codes from elliptic and genus-2
//! curves.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use agmds::catalog::{Catalog, CatalogEntry, CatalogError};
use agmds::code::{
    invariant_report, mds_check_group, schur_square, singular_minor, CodeError, CodeReport,
    LinearCode, DEFAULT_BUDGET,
};
use agmds::constructions::{
    coprime_coset, coprime_length, coset_recipe, genus2_search, rs_baseline, selfdual_pipeline,
    sqrt_p_length, supersingular_recipe, twisted_rs, Certified, ConstructionError,
    ConstructionRecord, RecipeOptions,
};
use agmds::curve::{Curve, CurveError};
use agmds::export::{export_code, import_json, import_matrix_text, ExportFormat, ImportError};
use agmds::field::{FieldError, FiniteField};
use agmds::group::{admissible_structures, admissible_traces, CurveGroup, GroupError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "agmds",
    version,
    about = "MDS codes from elliptic and genus-2 curves"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// JSON-lines catalog that receives built codes.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[arg(long, global = true, env = "AGMDS_SEED", default_value_t = 0)]
    seed: u64,
    /// Work limit for each exhaustive scan.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Return codes that fail the MDS check instead of exiting with status 1.
    #[arg(long, global = true)]
    allow_near_mds: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Point count, group structure and points of a curve.
    CurveInfo {
        #[arg(long)]
        q: u64,
        /// `g1:a1,a3,a2,a4,a6` or `g2:f0,..,f5;h0,h1,h2`.
        #[arg(long)]
        curve: String,
        /// List every rational point.
        #[arg(long)]
        points: bool,
    },
    /// Admissible point counts and group structures over F_q.
    Tables {
        #[arg(long)]
        q: u64,
    },
    /// Run a construction recipe.
    Build(BuildArgs),
    /// Recompute the report of a stored or exported code.
    Certify(Source),
    /// Schur square dimension and distance.
    Schur(Source),
    /// Self-dual MDS code over F_(2^(s1 s2)).
    Selfdual {
        #[arg(long)]
        s1: u32,
        #[arg(long)]
        s2: u32,
        #[arg(long)]
        t: u32,
        #[arg(long = "Lp")]
        lp: u64,
        /// Keep the coset evaluation set even when it is not MDS.
        #[arg(long)]
        no_fallback: bool,
    },
    /// Try every admissible point count for a coset code of length n.
    Search {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u32,
    },
    /// List or show catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Write a code's generator matrix.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::MatrixText)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { id: String },
}

#[derive(Args)]
struct Source {
    /// Catalog entry id (or unique prefix); needs --catalog.
    #[arg(long, conflicts_with = "input")]
    id: Option<String>,
    /// Exported matrix file (matrix-text or JSON).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    MatrixText,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Recipe {
    Coset,
    CoprimeCoset,
    CoprimeLength,
    SqrtPLength,
    Supersingular,
    TwistedRs,
    Rs,
    Genus2,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    recipe: Recipe,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long = "N")]
    big_n: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l1: Option<u64>,
    #[arg(long)]
    l2: Option<u64>,
    #[arg(long)]
    p: Option<u32>,
    /// Extension degree for the supersingular recipe.
    #[arg(long)]
    e: Option<u32>,
    /// Use length n + 1 in the sqrt-p-length recipe.
    #[arg(long)]
    longer: bool,
    /// Twist coefficient, as an element text form.
    #[arg(long)]
    eta: Option<String>,
    /// Comma-separated evaluation points for the RS recipes.
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<String>,
    /// Genus-2 curve text for the genus2 recipe.
    #[arg(long)]
    curve: Option<String>,
    #[arg(long, default_value_t = 1000)]
    restarts: u64,
}

/// Failures mapped onto exit codes.
enum Failure {
    /// Exit 1: the object does not exist or is not MDS.
    NotFound(String),
    /// Exit 2: a violated precondition or bad input.
    Usage(String),
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        use ConstructionError as E;
        match e {
            E::PreconditionFailed(_)
            | E::DuplicateEvaluationPoints
            | E::Field(_)
            | E::Curve(CurveError::Parse(_) | CurveError::BadModel(_) | CurveError::Singular)
            | E::Group(GroupError::NotPrimePower(_) | GroupError::OutsideHasse { .. })
            | E::Code(CodeError::DegreeOutOfRange { .. } | CodeError::RangeViolation(_)) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::NotFound(e.to_string()),
        }
    }
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Usage(e.to_string())
            }
        }
    )*};
}
usage_from!(
    FieldError,
    CurveError,
    GroupError,
    ImportError,
    std::io::Error
);

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Self {
        ConstructionError::from(e).into()
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::NotFound(e.to_string())
    }
}

type Outcome = Result<(Value, String), Failure>;

fn require<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this recipe")))
}

fn field_of_order(q: u64) -> Result<FiniteField, Failure> {
    Ok(FiniteField::with_order(q)?)
}

fn describe_report(r: &CodeReport) -> String {
    let d = r.d.map_or("?".to_string(), |d| d.to_string());
    let mds = match r.is_mds {
        Some(true) => "MDS",
        Some(false) => "not MDS",
        None => "MDS unknown",
    };
    let schur_d = r.schur_d.map_or("?".to_string(), |d| d.to_string());
    format!(
        "code    [{}, {}, {d}] {mds}\nschur   dim {} d {schur_d}\nhull    dim {} self-dual {}\n",
        r.n, r.k, r.schur_dim, r.hull_dim, r.self_dual
    )
}

fn describe_entry(e: &CatalogEntry) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "id      {}", e.id);
    let _ = writeln!(s, "recipe  {}", e.construction.recipe);
    let _ = writeln!(s, "field   {}", e.field);
    if let Some(c) = &e.curve {
        let _ = writeln!(s, "curve   {c}");
    }
    if let (Some(n), Some(g)) = (e.curve_order, e.group) {
        let _ = writeln!(s, "N       {n} (Z/{} x Z/{})", g.d1, g.d2);
    }
    s.push_str(&describe_report(&e.report));
    if !e.points.is_empty() {
        let _ = writeln!(s, "points  {}", e.points.join(" "));
    }
    for note in &e.construction.notes {
        let _ = writeln!(s, "note    {note}");
    }
    s
}

struct Ctx<'a> {
    g: &'a Global,
}

impl Ctx<'_> {
    fn opts(&self) -> RecipeOptions {
        RecipeOptions {
            seed: self.g.seed,
            budget: self.g.budget,
            require_mds: !self.g.allow_near_mds,
            ..RecipeOptions::default()
        }
    }

    /// Stores `c` when a catalog is configured; the printed entry never
    /// carries a timestamp so output stays reproducible.
    fn publish(&self, c: &Certified) -> Outcome {
        let entry = CatalogEntry::from_certified(c);
        let mut text = describe_entry(&entry);
        if let Some(path) = &self.g.catalog {
            let stored = CatalogEntry {
                created: Some(chrono::Utc::now().to_rfc3339()),
                ..entry.clone()
            };
            let added = Catalog::new(path).store(&stored)?;
            let _ = writeln!(
                text,
                "catalog {} ({})",
                path.display(),
                if added { "added" } else { "already present" }
            );
        }
        Ok((serde_json::to_value(&entry).expect("plain data"), text))
    }

    fn load_source(&self, src: &Source) -> Result<(LinearCode, Option<CatalogEntry>), Failure> {
        match (&src.id, &src.input) {
            (Some(id), _) => {
                let path = self
                    .g
                    .catalog
                    .as_ref()
                    .ok_or_else(|| Failure::Usage("--id needs --catalog".into()))?;
                let mut found = Catalog::new(path).find(id)?;
                if found.len() > 1 {
                    return Err(Failure::Usage(format!("id prefix {id} is ambiguous")));
                }
                let entry = found
                    .pop()
                    .ok_or_else(|| Failure::NotFound(format!("no catalog entry with id {id}")))?;
                let text = matrix_text(&entry);
                Ok((import_matrix_text(&text)?, Some(entry)))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)?;
                let code = if text.trim_start().starts_with('{') {
                    import_json(&text)?
                } else {
                    import_matrix_text(&text)?
                };
                Ok((code, None))
            }
            (None, None) => Err(Failure::Usage("one of --id or --input is required".into())),
        }
    }

    fn curve_info(&self, q: u64, text: &str, list: bool) -> Outcome {
        let field = field_of_order(q)?;
        let curve = Curve::parse(&field, text)?;
        let points = curve.enumerate_points()?;
        let mut doc = json!({
            "field": field.to_string(),
            "curve": curve.to_string(),
            "genus": curve.genus(),
            "N": points.len(),
        });
        let mut out = format!(
            "field   {field}\ncurve   {curve}\ngenus   {}\nN       {}\n",
            curve.genus(),
            points.len()
        );
        if curve.genus() == 1 {
            let s = CurveGroup::new(&curve)?.structure();
            doc["group"] = json!(s);
            let _ = writeln!(out, "group   Z/{} x Z/{}", s.d1, s.d2);
        }
        if list {
            let pts: Vec<String> = points.iter().map(|p| curve.format_point(p)).collect();
            let _ = writeln!(out, "points  {}", pts.join(" "));
            doc["points"] = json!(pts);
        }
        Ok((doc, out))
    }

    fn tables(&self, q: u64) -> Outcome {
        let mut rows = Vec::new();
        let mut out = format!("{:>6} {:>6}  {:<20} structures\n", "N", "beta", "case");
        for (n, beta, case) in admissible_traces(q)? {
            let shapes = admissible_structures(q, n)?;
            let text: Vec<String> = shapes
                .iter()
                .map(|s| format!("({},{})", s.d1, s.d2))
                .collect();
            let _ = writeln!(
                out,
                "{n:>6} {beta:>6}  {:<20} {}",
                format!("{case:?}"),
                text.join(" ")
            );
            rows.push(json!({"N": n, "beta": beta, "case": case, "structures": shapes}));
        }
        Ok((json!({"q": q, "orders": rows}), out))
    }

    fn build(&self, a: &BuildArgs) -> Outcome {
        let opts = self.opts();
        let certified = match a.recipe {
            Recipe::Coset => {
                let field = field_of_order(require(a.q, "q")?)?;
                coset_recipe(
                    &field,
                    require(a.big_n, "N")?,
                    require(a.n, "n")?,
                    require(a.m, "m")?,
                    &opts,
                )?
            }
            Recipe::CoprimeCoset => {
                let field = field_of_order(require(a.q, "q")?)?;
                coprime_coset(
                    &field,
                    require(a.l1, "l1")?,
                    require(a.l2, "l2")?,
                    require(a.m, "m")?,
                    &opts,
                )?
            }
            Recipe::CoprimeLength => {
                let field = field_of_order(require(a.q, "q")?)?;
                coprime_length(&field, require(a.n, "n")?, require(a.m, "m")?, &opts)?
            }
            Recipe::SqrtPLength => {
                sqrt_p_length(require(a.p, "p")?, require(a.k, "k")?, a.longer, &opts)?
            }
            Recipe::Supersingular => supersingular_recipe(
                require(a.p, "p")?,
                a.e.unwrap_or(1),
                require(a.big_n, "N")?,
                require(a.k, "k")?,
                &opts,
            )?,
            Recipe::TwistedRs | Recipe::Rs => {
                let field = field_of_order(require(a.q, "q")?)?;
                let alpha = a
                    .alpha
                    .iter()
                    .map(|t| field.parse_element(t))
                    .collect::<Result<Vec<_>, _>>()?;
                let k = require(a.k, "k")? as usize;
                if let Recipe::Rs = a.recipe {
                    let code = rs_baseline(&field, &alpha, k)?;
                    let report = invariant_report(&code, opts.budget);
                    let record = ConstructionRecord {
                        recipe: "rs".into(),
                        params: [
                            ("alpha".to_string(), json!(a.alpha)),
                            ("k".to_string(), json!(k)),
                        ]
                        .into(),
                        seed: opts.seed,
                        notes: Vec::new(),
                    };
                    Certified {
                        code,
                        report,
                        record,
                        curve_order: None,
                        group: None,
                        group_mds: None,
                    }
                } else {
                    let eta = field.parse_element(&require(a.eta.clone(), "eta")?)?;
                    let t = twisted_rs(&field, &alpha, eta, k, &opts)?;
                    let mut c = t.certified;
                    c.record
                        .notes
                        .push(format!("eta-product condition: {}", t.mds_condition));
                    c.record.notes.push(format!(
                        "literal product condition: {}",
                        t.literal_product_condition
                    ));
                    if c.report.is_mds == Some(false) && opts.require_mds {
                        return Err(Failure::NotFound("twisted RS code is not MDS".into()));
                    }
                    c
                }
            }
            Recipe::Genus2 => {
                let field = field_of_order(require(a.q, "q")?)?;
                let curve = Curve::parse(&field, &require(a.curve.clone(), "curve")?)?;
                genus2_search(
                    &curve,
                    require(a.n, "n")? as usize,
                    require(a.m, "m")?,
                    a.restarts,
                    &opts,
                )?
            }
        };
        self.publish(&certified)
    }

    fn certify(&self, src: &Source) -> Outcome {
        let (code, entry) = self.load_source(src)?;
        let report = invariant_report(&code, self.g.budget);
        let minor = singular_minor(&code, self.g.budget).ok().flatten();
        let mut doc = json!({"report": report, "singular_columns": minor});
        let mut out = describe_report(&report);
        if let Some(cols) = &minor {
            let _ = writeln!(out, "minor   columns {cols:?} are dependent");
        }
        // elliptic entries are also checked with the zero-sum criterion
        if let Some(e) = entry
            .as_ref()
            .filter(|e| e.curve.is_some() && e.m.is_some())
        {
            let field: FiniteField = e.field.parse()?;
            let curve = Curve::parse(&field, e.curve.as_ref().expect("checked"))?;
            if curve.genus() == 1 && e.construction.recipe != "selfdual" {
                let pts = e
                    .points
                    .iter()
                    .map(|p| curve.parse_point(p))
                    .collect::<Result<Vec<_>, _>>()?;
                let group_ok =
                    mds_check_group(&curve, &pts, e.m.expect("checked") as usize, self.g.budget)?;
                doc["group_mds"] = json!(group_ok);
                let _ = writeln!(out, "group   zero-sum criterion MDS {group_ok}");
            }
        }
        if report.is_mds == Some(false) && !self.g.allow_near_mds {
            return Err(Failure::NotFound(format!("{}not MDS", out)));
        }
        Ok((doc, out))
    }

    fn schur(&self, src: &Source) -> Outcome {
        let (code, _) = self.load_source(src)?;
        let square = schur_square(&code);
        let report = invariant_report(&code, self.g.budget);
        let out = format!(
            "code    [{}, {}]\nschur   dim {} d {}\nrs      {}\n",
            code.n(),
            code.k(),
            report.schur_dim,
            report.schur_d.map_or("?".into(), |d| d.to_string()),
            if report.non_rs_certified {
                "not equivalent to a Reed-Solomon code"
            } else {
                "Schur dimension compatible with Reed-Solomon"
            }
        );
        let doc = json!({
            "n": code.n(), "k": code.k(), "schur_dim": square.k(),
            "schur_d": report.schur_d, "non_rs_certified": report.non_rs_certified,
        });
        Ok((doc, out))
    }

    fn search(&self, q: u64, n: u64, m: u32) -> Outcome {
        let field = field_of_order(q)?;
        let mut tried = 0;
        for (order, _, _) in admissible_traces(q)? {
            if order % n != 0 {
                continue;
            }
            tried += 1;
            match coset_recipe(&field, order, n, m, &self.opts()) {
                Ok(c) => return self.publish(&c),
                Err(ConstructionError::PreconditionFailed(msg)) => return Err(Failure::Usage(msg)),
                Err(e) => log::info!("N = {order}: {e}"),
            }
        }
        Err(Failure::NotFound(format!(
            "no coset code of length {n} and dimension {m} over F_{q} ({tried} point counts tried)"
        )))
    }

    fn catalog(&self, action: &CatalogAction) -> Outcome {
        let path = self
            .g
            .catalog
            .as_ref()
            .ok_or_else(|| Failure::Usage("--catalog is required".into()))?;
        let cat = Catalog::new(path);
        match action {
            CatalogAction::List => {
                let entries = cat.load()?;
                let mut out = String::new();
                for e in &entries {
                    let d = e.report.d.map_or("?".into(), |d| d.to_string());
                    let _ = writeln!(
                        out,
                        "{}  {:<14} {:<12} [{}, {}, {d}]",
                        &e.id[..12],
                        e.construction.recipe,
                        e.field,
                        e.n,
                        e.k
                    );
                }
                Ok((serde_json::to_value(&entries).expect("plain data"), out))
            }
            CatalogAction::Show { id } => {
                let mut found = cat.find(id)?;
                match (found.pop(), found.is_empty()) {
                    (Some(e), true) => Ok((
                        serde_json::to_value(&e).expect("plain data"),
                        describe_entry(&e),
                    )),
                    (Some(_), false) => Err(Failure::Usage(format!("id prefix {id} is ambiguous"))),
                    (None, _) => Err(Failure::NotFound(format!("no catalog entry with id {id}"))),
                }
            }
        }
    }

    fn export(&self, src: &Source, format: Format) -> Result<String, Failure> {
        let (code, _) = self.load_source(src)?;
        Ok(export_code(
            &code,
            match format {
                Format::MatrixText => ExportFormat::MatrixText,
                Format::Json => ExportFormat::Json,
            },
        ))
    }
}

fn matrix_text(e: &CatalogEntry) -> String {
    let mut s = format!("field {}\nn {} k {}\n", e.field, e.n, e.k);
    for row in &e.matrix {
        let _ = writeln!(s, "row: {}", row.join(" "));
    }
    s
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let ctx = Ctx { g: &cli.global };
    let result = match &cli.command {
        Command::CurveInfo { q, curve, points } => ctx.curve_info(*q, curve, *points),
        Command::Tables { q } => ctx.tables(*q),
        Command::Build(a) => ctx.build(a),
        Command::Certify(src) => ctx.certify(src),
        Command::Schur(src) => ctx.schur(src),
        Command::Selfdual {
            s1,
            s2,
            t,
            lp,
            no_fallback,
        } => match selfdual_pipeline(*s1, *s2, *t, *lp, !no_fallback, &ctx.opts()) {
            Ok(c) => ctx.publish(&c),
            Err(e) => Err(e.into()),
        },
        Command::Search { q, n, m } => ctx.search(*q, *n, *m),
        Command::Catalog { action } => ctx.catalog(action),
        Command::Export { source, format } => match ctx.export(source, *format) {
            Ok(bytes) => {
                print!("{bytes}");
                return ExitCode::SUCCESS;
            }
            Err(e) => Err(e),
        },
    };
    match result {
        Ok((doc, text)) => {
            if cli.global.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("plain data")
                );
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::NotFound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
