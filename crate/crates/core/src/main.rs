//! Command-line front end: every library operation as a subcommand
//! with JSON documents in, JSON (or a plain table where noted) out,
//! and byte-identical output for identical invocations.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use projendo::algebra::{Int, Rational};
use projendo::chow::{c2_twist_expand, solve_twist_degree, TwistSpec};
use projendo::equivariant::{equivariant_endomorphism, invariant_basis};
use projendo::error::Error;
use projendo::homcount::{
    brute_force_homs, builtin_group_data, builtin_perm_group, count_homs, GroupFamily,
};
use projendo::json::{
    factorization_dto, fixed_maps_dto, form_dto, limit_dto, map_dto, parse_components,
    parse_group, parse_matrix, torus_check_dto, FactorizationDto, FixedMapsDto, FormDto,
    GroupIn, LimitDto, MapDto, MapIn, MatrixIn, TorusCheckDto,
};
use projendo::maps::{
    certify_regular, classify_orbit, make_map, ramification_form, squarefree_factorization,
    stabilizer_check, Regularity,
};
use projendo::selftest;
use projendo::stability::{fixed_maps, one_param_limit, torus_weight_analysis};

#[derive(Parser)]
#[command(name = "projendo", version, about = "Exact computations for self-maps of projective spaces and bundles", disable_help_subcommand = true)]
struct Cli {
    /// Seed for randomized searches; identical seeds give identical output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the result to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Include extra detail where a subcommand offers it.
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a self-map commuting with a finite matrix group.
    Equivariant {
        /// JSON document listing the group generators.
        #[arg(long, value_name = "PATH")]
        group: PathBuf,
        /// Invariant degree m; the map built has degree (m - 1)^2.
        #[arg(long, value_name = "M")]
        degree: usize,
        /// Candidate budget for the smooth-invariant search.
        #[arg(long, default_value_t = 1000)]
        budget: usize,
    },
    /// Basis of the degree-m invariant forms of a finite matrix group.
    Invariants {
        /// JSON document listing the group generators.
        #[arg(long, value_name = "PATH")]
        group: PathBuf,
        /// Degree of the invariant forms.
        #[arg(long, value_name = "M")]
        degree: usize,
    },
    /// Orbit classification of a regular self-map of the line.
    Classify {
        /// JSON document with the map components.
        #[arg(long, value_name = "PATH")]
        map: PathBuf,
    },
    /// Ramification form of a regular self-map of the line, factored.
    Ramification {
        /// JSON document with the map components.
        #[arg(long, value_name = "PATH")]
        map: PathBuf,
    },
    /// Regularity certificate for a map given by its components.
    Regular {
        /// JSON document with the map components.
        #[arg(long, value_name = "PATH")]
        map: PathBuf,
    },
    /// Eigenspace report for maps fixed by conjugation by one matrix.
    FixedMaps {
        /// JSON document with the matrix entries.
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
        /// Degree of the fixed maps sought.
        #[arg(long, value_name = "M")]
        degree: usize,
    },
    /// Weight table of a component tuple under a one-parameter torus.
    TorusCheck {
        /// Comma-separated integer weights, one per variable.
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        exponents: String,
        /// JSON document with the component forms, taken as written.
        #[arg(long, value_name = "PATH")]
        map: PathBuf,
    },
    /// Limit of a line map under source and target torus weightings.
    Limit {
        /// JSON document with the map components.
        #[arg(long, value_name = "PATH")]
        map: PathBuf,
        /// Source weight exponent.
        #[arg(short = 'c', value_name = "C", allow_hyphen_values = true)]
        c: i64,
        /// Target weight exponent.
        #[arg(short = 'b', value_name = "B", allow_hyphen_values = true)]
        b: i64,
    },
    /// Count surface-group homomorphisms into a built-in finite group.
    CountHoms {
        /// Family name: cyclic, dihedral, A4, S4, or A5.
        #[arg(long, value_name = "NAME")]
        family: String,
        /// Parameter for the cyclic and dihedral families.
        #[arg(short = 'n', value_name = "N", allow_hyphen_values = true)]
        n: Option<i64>,
        /// Genus of the surface.
        #[arg(long, value_name = "G")]
        genus: usize,
        /// Cross-check the formula against direct enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Intersection-theory identities: run them or print an expansion.
    Chow {
        /// Identity set to run; only "all" is defined.
        #[arg(long, value_name = "SET")]
        check: Option<String>,
        /// Expansion to print; only "c2-twist" is defined.
        #[arg(long, value_name = "WHAT")]
        expand: Option<String>,
        /// Twist degree for --expand.
        #[arg(short = 'k', value_name = "K", allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Run every built-in diagnostic check and print a table.
    Selftest,
}

/// A failure with its machine-readable code and the exit class:
/// internal invariant violations exit 1, everything else exits 2.
struct Failure {
    code: &'static str,
    detail: String,
    internal: bool,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        Failure {
            code: error_code(&err),
            detail: err.to_string(),
            internal: matches!(err, Error::Internal(_)),
        }
    }
}

fn error_code(err: &Error) -> &'static str {
    match err {
        Error::FieldMismatch => "field-mismatch",
        Error::DivisionByZero => "division-by-zero",
        Error::NotInvertible => "not-invertible",
        Error::BadMinimalPolynomial => "bad-minimal-polynomial",
        Error::ReducibleMinimalPolynomial => "reducible-minimal-polynomial",
        Error::IrreducibilityNotChecked => "irreducibility-not-checked",
        Error::IrreducibilityVerificationFailed => "irreducibility-verification-failed",
        Error::DegreeMismatch { .. } => "degree-mismatch",
        Error::VariableCountMismatch { .. } => "variable-count-mismatch",
        Error::NotHomogeneous => "not-homogeneous",
        Error::DimensionMismatch => "dimension-mismatch",
        Error::SingularMatrix => "singular-matrix",
        Error::AllComponentsZero => "all-components-zero",
        Error::ConstantAfterReduction => "constant-after-reduction",
        Error::UncertifiedInput => "uncertified-input",
        Error::UnsupportedShape => "unsupported-shape",
        Error::DegreeTooSmall { .. } => "degree-too-small",
        Error::ClosureCapExceeded { .. } => "closure-cap-exceeded",
        Error::SingularGenerator => "singular-generator",
        Error::NoInvariants => "no-invariants",
        Error::SearchBudgetExhausted { .. } => "search-budget-exhausted",
        Error::SmoothnessNotCertified => "smoothness-not-certified",
        Error::EquivarianceFailed { .. } => "equivariance-failed",
        Error::ZeroSubgroup => "zero-subgroup",
        Error::CharacterDegreeSum { .. } => "character-degree-sum",
        Error::UnknownFamily(_) => "unknown-family",
        Error::GenusUnsupported(_) => "genus-unsupported",
        Error::EnumerationGuard { .. } => "enumeration-guard",
        Error::DegenerateTwist(_) => "degenerate-twist",
        Error::InvalidParameter(_) => "invalid-parameter",
        Error::Internal(_) => "internal",
    }
}

fn invalid(detail: String) -> Failure {
    Failure {
        code: "invalid-parameter",
        detail,
        internal: false,
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|err| Failure {
        code: "unreadable-input",
        detail: format!("{}: {err}", path.display()),
        internal: false,
    })?;
    serde_json::from_str(&text).map_err(|err| Failure {
        code: "malformed-json",
        detail: format!("{}: {err}", path.display()),
        internal: false,
    })
}

fn emit<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct ElementCheck {
    element: usize,
    holds: bool,
}

#[derive(Serialize)]
struct EquivariantReport {
    group_order: usize,
    group_dim: usize,
    degree: usize,
    map: MapDto,
    transcript: Vec<ElementCheck>,
    all_hold: bool,
}

#[derive(Serialize)]
struct InvariantsReport {
    degree: usize,
    dim: usize,
    basis: Vec<FormDto>,
}

#[derive(Serialize)]
struct ClassifyReport {
    tag: String,
    map: MapDto,
    witness: FactorizationDto,
}

#[derive(Serialize)]
struct RamificationReport {
    map: MapDto,
    ramification: FormDto,
    factorization: FactorizationDto,
}

#[derive(Serialize)]
struct RegularReport {
    regular: bool,
    map: MapDto,
}

#[derive(Serialize)]
struct CountHomsReport {
    family: String,
    order: u64,
    irrep_degrees: Vec<u64>,
    genus: usize,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_count: Option<u64>,
}

fn run(cli: &Cli) -> Result<(String, ExitCode), Failure> {
    match &cli.command {
        Command::Equivariant {
            group,
            degree,
            budget,
        } => {
            let doc: GroupIn = read_json(group)?;
            let group = parse_group(&doc)?;
            let map = equivariant_endomorphism(&group, *degree, cli.seed, *budget)?;
            let transcript: Vec<ElementCheck> = group
                .elements()
                .iter()
                .enumerate()
                .map(|(element, g)| {
                    Ok(ElementCheck {
                        element,
                        holds: stabilizer_check(&map, g, None)?,
                    })
                })
                .collect::<Result<_, Error>>()?;
            let all_hold = transcript.iter().all(|check| check.holds);
            let report = EquivariantReport {
                group_order: group.order(),
                group_dim: group.dim(),
                degree: map.degree(),
                map: map_dto(&map),
                transcript,
                all_hold,
            };
            Ok((emit(&report), ExitCode::SUCCESS))
        }
        Command::Invariants { group, degree } => {
            let doc: GroupIn = read_json(group)?;
            let group = parse_group(&doc)?;
            let basis = invariant_basis(&group, *degree)?;
            let report = InvariantsReport {
                degree: basis.degree,
                dim: basis.dim(),
                basis: basis.basis.iter().map(form_dto).collect(),
            };
            Ok((emit(&report), ExitCode::SUCCESS))
        }
        Command::Classify { map } => {
            let doc: MapIn = read_json(map)?;
            let map = certify_regular(&make_map(&parse_components(&doc)?)?)?;
            let orbit = classify_orbit(&map)?;
            let report = ClassifyReport {
                tag: orbit.tag.as_str().to_string(),
                map: map_dto(&map),
                witness: factorization_dto(&orbit.witness),
            };
            Ok((emit(&report), ExitCode::SUCCESS))
        }
        Command::Ramification { map } => {
            let doc: MapIn = read_json(map)?;
            let map = certify_regular(&make_map(&parse_components(&doc)?)?)?;
            let ram = ramification_form(&map)?;
            let factorization = squarefree_factorization(&ram)?;
            let report = RamificationReport {
                map: map_dto(&map),
                ramification: form_dto(&ram),
                factorization: factorization_dto(&factorization),
            };
            Ok((emit(&report), ExitCode::SUCCESS))
        }
        Command::Regular { map } => {
            let doc: MapIn = read_json(map)?;
            let map = certify_regular(&make_map(&parse_components(&doc)?)?)?;
            let report = RegularReport {
                regular: map.regularity() == Regularity::CertifiedRegular,
                map: map_dto(&map),
            };
            Ok((emit(&report), ExitCode::SUCCESS))
        }
        Command::FixedMaps { matrix, degree } => {
            let doc: MatrixIn = read_json(matrix)?;
            let g = parse_matrix(&doc)?;
            let report: FixedMapsDto = fixed_maps_dto(&fixed_maps(&g, *degree)?);
            Ok((emit(&report), ExitCode::SUCCESS))
        }
        Command::TorusCheck { exponents, map } => {
            let weights = parse_exponents(exponents)?;
            let doc: MapIn = read_json(map)?;
            let components = parse_components(&doc)?;
            let (profile, fixed) = torus_weight_analysis(&weights, &components)?;
            let report: TorusCheckDto = torus_check_dto(&profile, fixed);
            Ok((emit(&report), ExitCode::SUCCESS))
        }
        Command::Limit { map, c, b } => {
            let doc: MapIn = read_json(map)?;
            let map = make_map(&parse_components(&doc)?)?;
            let result = one_param_limit(&map, *c, *b)?;
            let report: LimitDto = limit_dto(*c, *b, &result);
            Ok((emit(&report), ExitCode::SUCCESS))
        }
        Command::CountHoms {
            family,
            n,
            genus,
            oracle,
        } => {
            let family = GroupFamily::from_name(family, *n)?;
            let data = builtin_group_data(family)?;
            let count = count_homs(&data, *genus);
            let oracle_count = if *oracle {
                let group = builtin_perm_group(family)?;
                let brute = brute_force_homs(&group, *genus)?;
                if Rational::from_integer(Int::from(brute)) != count {
                    return Err(Error::Internal(format!(
                        "formula gives {count} but enumeration gives {brute}"
                    ))
                    .into());
                }
                Some(brute)
            } else {
                None
            };
            if cli.verbose {
                let report = CountHomsReport {
                    family: data.name().to_string(),
                    order: data.order(),
                    irrep_degrees: data.irrep_degrees().to_vec(),
                    genus: *genus,
                    count: count.to_string(),
                    oracle_count,
                };
                Ok((emit(&report), ExitCode::SUCCESS))
            } else {
                Ok((format!("{count}\n"), ExitCode::SUCCESS))
            }
        }
        Command::Chow { check, expand, k } => run_chow(check, expand, *k),
        Command::Selftest => {
            let reports = selftest::run_all();
            let mut lines = Vec::new();
            for report in &reports {
                let status = if report.passed { "pass" } else { "FAIL" };
                lines.push(format!("{:<34} {status}", report.name));
                if !report.passed || cli.verbose {
                    lines.push(format!("    {}", report.detail));
                }
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            lines.push(format!("{passed} of {} checks passed", reports.len()));
            let code = if passed == reports.len() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            };
            Ok((format!("{}\n", lines.join("\n")), code))
        }
    }
}

fn parse_exponents(text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|piece| {
            piece.trim().parse::<i64>().map_err(|_| {
                invalid(format!(
                    "exponent list must be comma-separated integers, got {piece:?}"
                ))
            })
        })
        .collect()
}

fn run_chow(
    check: &Option<String>,
    expand: &Option<String>,
    k: Option<i64>,
) -> Result<(String, ExitCode), Failure> {
    match (check, expand) {
        (Some(set), None) => {
            if set != "all" {
                return Err(invalid(format!(
                    "only --check all is defined, got {set:?}"
                )));
            }
            let rows = selftest::chow_identity_checks();
            let mut lines = Vec::new();
            for row in &rows {
                let status = if row.passed { "pass" } else { "FAIL" };
                lines.push(format!("{:<20} {status}", row.name));
                if !row.passed {
                    lines.push(format!("    {}", row.detail));
                }
            }
            let all_pass = rows.iter().all(|row| row.passed);
            let code = if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            };
            Ok((format!("{}\n", lines.join("\n")), code))
        }
        (None, Some(what)) => {
            if what != "c2-twist" {
                return Err(invalid(format!(
                    "only --expand c2-twist is defined, got {what:?}"
                )));
            }
            let k = k.ok_or_else(|| invalid("--expand c2-twist needs -k".into()))?;
            let twist = solve_twist_degree(k)?;
            let spec = TwistSpec::new(k, twist)?;
            Ok((format!("{}\n", c2_twist_expand(&spec)), ExitCode::SUCCESS))
        }
        (Some(_), Some(_)) => Err(invalid(
            "--check and --expand are mutually exclusive".into(),
        )),
        (None, None) => Err(invalid("chow needs --check or --expand".into())),
    }
}

fn deliver(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|err| Failure {
            code: "unwritable-output",
            detail: format!("{}: {err}", path.display()),
            internal: false,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let failure = match run(&cli) {
        Ok((text, code)) => match deliver(&cli.output, &text) {
            Ok(()) => return code,
            Err(failure) => failure,
        },
        Err(failure) => failure,
    };
    #[derive(Serialize)]
    struct ErrorBody {
        error: &'static str,
        detail: String,
    }
    let body = ErrorBody {
        error: failure.code,
        detail: failure.detail,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&body).expect("error object serializes")
    );
    if failure.internal {
        ExitCode::FAILURE
    } else {
        ExitCode::from(2)
    }
}
