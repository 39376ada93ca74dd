//! Command-line interface: spectral pages, Novikov–Betti numbers,
//! survivors and critical-point bounds for bundled or user-supplied
//! complexes. JSON output is schema-stable; text output is not.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ximassey::bound::{bound_search, verify_witness, FactorPool};
use ximassey::cohomology::{
    cohomology_basis, cup_length, parse_cochain, IntegerCocycle, LineBundle,
};
use ximassey::complex::{connected_sum, product_complex, SimplicialComplex};
use ximassey::deformation::{build_deformed, DeformedComplex};
use ximassey::error::Error;
use ximassey::field::{Field, FieldSpec, PrimeField, Rationals};
use ximassey::library::{example_names, load_example, Example};
use ximassey::report;

#[derive(Parser)]
#[command(name = "ximassey", version, about = "Massey spectral sequences and critical point bounds over a simplicial complex")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Complex file path (repeatable only for product/consum)
    #[arg(long = "complex", value_name = "PATH")]
    complex: Vec<String>,
    /// Bundled example name (see `examples`)
    #[arg(long = "example", value_name = "NAME")]
    example: Vec<String>,
    /// Coefficient field: Q or F<p>
    #[arg(long = "field", default_value = "Q")]
    field: String,
    /// Integer cocycle: a file path, or a bundled cocycle name when used
    /// with --example
    #[arg(long = "xi", value_name = "PATH|NAME")]
    xi: Option<String>,
    /// Flat line bundle file (repeatable)
    #[arg(long = "bundle", value_name = "PATH")]
    bundle: Vec<String>,
    /// Cochain file (repeatable)
    #[arg(long = "class", value_name = "PATH")]
    class: Vec<String>,
    /// Cap on total product degree; defaults to the dimension
    #[arg(long = "dim-cap", value_name = "N")]
    dim_cap: Option<usize>,
    /// json or text
    #[arg(long = "format", default_value = "json")]
    format: String,
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Betti numbers over the chosen field
    Betti(InputArgs),
    /// Cohomological cup-length
    Cuplen(InputArgs),
    /// Spectral sequence pages, differential ranks and stabilization
    Pages(InputArgs),
    /// Novikov–Betti numbers by rank over k(s) (the oracle route)
    Novikov(InputArgs),
    /// Survivor space bases with lift certificates
    Survivors(InputArgs),
    /// Combinatorial strict-survivor check of a cocycle (--class)
    StrictCheck(InputArgs),
    /// Critical-point lower bound via the two-survivor product search
    Bound(InputArgs),
    /// Staircase product of two complexes (emits a complex file)
    Product(InputArgs),
    /// Connected sum of two complexes (emits a complex file)
    Consum(ConsumArgs),
    /// List bundled examples
    Examples(InputArgs),
}

#[derive(Args, Clone)]
struct ConsumArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Facet of the first complex, comma-separated vertices
    #[arg(long = "facet-a", value_name = "V,V,..")]
    facet_a: String,
    /// Facet of the second complex; glued onto facet-a positionally
    #[arg(long = "facet-b", value_name = "V,V,..")]
    facet_b: String,
}

struct Loaded {
    name: String,
    complex: SimplicialComplex,
    example: Option<Example>,
}

fn load_one(args: &InputArgs) -> Result<Loaded, Error> {
    match (args.example.len(), args.complex.len()) {
        (1, 0) => {
            let ex = load_example(&args.example[0])?;
            Ok(Loaded { name: ex.name.clone(), complex: ex.complex.clone(), example: Some(ex) })
        }
        (0, 1) => {
            let text = std::fs::read_to_string(&args.complex[0])?;
            Ok(Loaded {
                name: args.complex[0].clone(),
                complex: SimplicialComplex::parse(&text)?,
                example: None,
            })
        }
        _ => Err(Error::Invalid(
            "give exactly one of --complex or --example".into(),
        )),
    }
}

fn load_two(args: &InputArgs) -> Result<(Loaded, Loaded), Error> {
    let mut sources: Vec<Loaded> = Vec::new();
    for name in &args.example {
        let ex = load_example(name)?;
        sources.push(Loaded { name: ex.name.clone(), complex: ex.complex.clone(), example: Some(ex) });
    }
    for path in &args.complex {
        let text = std::fs::read_to_string(path)?;
        sources.push(Loaded { name: path.clone(), complex: SimplicialComplex::parse(&text)?, example: None });
    }
    if sources.len() != 2 {
        return Err(Error::Invalid(
            "product/consum need exactly two complexes (via --complex/--example)".into(),
        ));
    }
    let second = sources.pop().unwrap();
    let first = sources.pop().unwrap();
    Ok((first, second))
}

fn load_xi(loaded: &Loaded, args: &InputArgs) -> Result<(String, IntegerCocycle), Error> {
    let Some(spec) = &args.xi else {
        return Err(Error::Invalid("this command needs --xi".into()));
    };
    if let Some(ex) = &loaded.example {
        if let Ok(z) = ex.cocycle(spec) {
            return Ok((format!("{}.{}", ex.name, spec), z.clone()));
        }
        // also accept qualified names like torus9.a
        if let Some(rest) = spec.strip_prefix(&format!("{}.", ex.name)) {
            if let Ok(z) = ex.cocycle(rest) {
                return Ok((spec.clone(), z.clone()));
            }
        }
    }
    let text = std::fs::read_to_string(spec)?;
    Ok((spec.clone(), IntegerCocycle::parse(&loaded.complex, &text)?))
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Examples(args) => {
            if args.format == "text" {
                for (name, desc) in example_names() {
                    println!("{name}: {desc}");
                }
            } else {
                let list: Vec<serde_json::Value> = example_names()
                    .into_iter()
                    .map(|(n, d)| serde_json::json!({ "name": n, "description": d }))
                    .collect();
                let head = report::header("examples", "-", None, None);
                let out = report::assemble(head, vec![("examples".into(), serde_json::Value::Array(list))]);
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Product(args) => {
            let (a, b) = load_two(args)?;
            let p = product_complex(&a.complex, &b.complex)?;
            print!("{}", p.complex.write());
            Ok(ExitCode::SUCCESS)
        }
        Command::Consum(cargs) => {
            let (a, b) = load_two(&cargs.input)?;
            let fa: Vec<String> = cargs.facet_a.split(',').map(|s| s.trim().to_string()).collect();
            let fb: Vec<String> = cargs.facet_b.split(',').map(|s| s.trim().to_string()).collect();
            if fa.len() != fb.len() {
                return Err(Error::Invalid("facets must have equal size".into()));
            }
            let gluing: Vec<(String, String)> =
                fb.iter().cloned().zip(fa.iter().cloned()).collect();
            let sum = connected_sum(&a.complex, &b.complex, &fa, &fb, &gluing)?;
            print!("{}", sum.write());
            Ok(ExitCode::SUCCESS)
        }
        Command::Betti(args)
        | Command::Cuplen(args)
        | Command::Pages(args)
        | Command::Novikov(args)
        | Command::Survivors(args)
        | Command::StrictCheck(args)
        | Command::Bound(args) => {
            let spec = FieldSpec::parse(&args.field)?;
            match spec {
                FieldSpec::Rationals => dispatch(&cli.command, args, Rationals),
                FieldSpec::Prime(p) => dispatch(&cli.command, args, PrimeField::new(p)?),
            }
        }
    }
}

fn dispatch<F: Field>(cmd: &Command, args: &InputArgs, field: F) -> Result<ExitCode, Error> {
    let loaded = load_one(args)?;
    let k = &loaded.complex;
    let fieldname = args.field.to_uppercase();
    let emit = |head: serde_json::Map<String, serde_json::Value>,
                payload: Vec<(String, serde_json::Value)>,
                text: String,
                format: &str| {
        if format == "text" {
            println!("{text}");
        } else {
            let out = report::assemble(head, payload);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    };

    match cmd {
        Command::Betti(_) => {
            let basis = cohomology_basis(&field, k);
            let betti = basis.betti();
            let chi = k.euler_characteristic();
            emit(
                report::header("betti", &loaded.name, Some(&fieldname), None),
                report::betti_payload(&betti, chi),
                format!("betti over {fieldname}: {betti:?} (chi = {chi})"),
                &args.format,
            );
        }
        Command::Cuplen(_) => {
            let basis = cohomology_basis(&field, k);
            let len = cup_length(&field, k, &basis);
            emit(
                report::header("cuplen", &loaded.name, Some(&fieldname), None),
                report::cuplen_payload(len),
                format!("cup-length over {fieldname}: {len}"),
                &args.format,
            );
        }
        Command::Pages(_) => {
            let (xi_name, zeta) = load_xi(&loaded, args)?;
            let dc = build_deformed(&field, k, &zeta)?;
            let rep = dc.spectral_pages();
            let mut text = format!(
                "chi = {}; betti = {:?}; novikov = {:?}; stabilizes at r = {}\n",
                rep.chi, rep.betti, rep.novikov_betti, rep.r_stab
            );
            for p in &rep.pages {
                text.push_str(&format!(
                    "  E_{}: dims {:?}, d-ranks {:?}\n",
                    p.r, p.dims, p.d_ranks
                ));
            }
            text.push_str(&format!("  E_inf: dims {:?}", rep.novikov_betti));
            emit(
                report::header("pages", &loaded.name, Some(&fieldname), Some(&xi_name)),
                report::pages_payload(&rep),
                text,
                &args.format,
            );
        }
        Command::Novikov(_) => {
            let (xi_name, zeta) = load_xi(&loaded, args)?;
            let dc = build_deformed(&field, k, &zeta)?;
            let b = dc.novikov_betti_oracle();
            emit(
                report::header("novikov", &loaded.name, Some(&fieldname), Some(&xi_name)),
                report::novikov_payload(&b),
                format!("novikov-betti over {fieldname}(s): {b:?}"),
                &args.format,
            );
        }
        Command::Survivors(_) => {
            let (xi_name, zeta) = load_xi(&loaded, args)?;
            let dc = build_deformed(&field, k, &zeta)?;
            let dims: Vec<usize> = (0..=dc.dim()).map(|q| dc.survivor_space(q).dim()).collect();
            emit(
                report::header("survivors", &loaded.name, Some(&fieldname), Some(&xi_name)),
                report::survivors_payload(&dc),
                format!("survivor space dimensions by degree: {dims:?}"),
                &args.format,
            );
        }
        Command::StrictCheck(_) => {
            let (xi_name, zeta) = load_xi(&loaded, args)?;
            let dc = build_deformed(&field, k, &zeta)?;
            if args.class.len() != 1 {
                return Err(Error::Invalid("strict-check needs exactly one --class".into()));
            }
            let c = load_class(&field, &loaded, &args.class[0])?;
            let strict = dc.strict_survivor_check(&c)?;
            emit(
                report::header("strict-check", &loaded.name, Some(&fieldname), Some(&xi_name)),
                report::strict_check_payload(strict),
                format!("strict survivor: {strict}"),
                &args.format,
            );
        }
        Command::Bound(_) => {
            let (xi_name, zeta) = load_xi(&loaded, args)?;
            let dc: DeformedComplex<F> = build_deformed(&field, k, &zeta)?;
            let mut pool = FactorPool::with_survivor_spaces(&dc)?;
            for path in &args.bundle {
                let text = std::fs::read_to_string(path)?;
                let mu = LineBundle::parse(&field, k, &text)?;
                pool.add_bundle(mu)?;
            }
            let cap = args.dim_cap.unwrap_or_else(|| k.dim());
            let rep = bound_search(&pool, cap);
            let verified = verify_witness(&rep, &pool);
            let mut payload = report::bound_payload(&pool, &rep);
            payload.push(("verified".into(), serde_json::json!(verified)));
            emit(
                report::header("bound", &loaded.name, Some(&fieldname), Some(&xi_name)),
                payload,
                format!(
                    "m = {}, cat(S) >= {}, #S >= {} (witness verified: {verified})",
                    rep.m, rep.cat_lower_bound, rep.count_lower_bound
                ),
                &args.format,
            );
        }
        _ => unreachable!("handled in run()"),
    }
    Ok(ExitCode::SUCCESS)
}

fn load_class<F: Field>(
    field: &F,
    loaded: &Loaded,
    spec: &str,
) -> Result<ximassey::cohomology::Cochain<F>, Error> {
    if let Some(ex) = &loaded.example {
        if let Ok(text) = ex.cochain_file(spec) {
            return parse_cochain(field, &loaded.complex, text);
        }
        if let Some(rest) = spec.strip_prefix(&format!("{}.", ex.name)) {
            if let Ok(text) = ex.cochain_file(rest) {
                return parse_cochain(field, &loaded.complex, text);
            }
        }
        // a bundled integer cocycle also names a class via field reduction
        if let Ok(z) = ex.cocycle(spec) {
            return Ok(z.to_cochain(field));
        }
    }
    let text = std::fs::read_to_string(spec)?;
    parse_cochain(field, &loaded.complex, &text)
}

fn main() -> ExitCode {
    // 0 = success, 2 = validation error, 1 = internal error
    match std::panic::catch_unwind(run) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("internal error");
            ExitCode::from(1)
        }
    }
}
