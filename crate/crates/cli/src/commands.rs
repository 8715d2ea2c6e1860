use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use lmn_core::represent::{first_mismatch, violation_at};
use lmn_core::{
    check_representable, enumerate_subalgebras, free_report, lukasiewicz_implication_table, parse, simplify,
    synthesize, verify_axioms, verify_representation, Assignment, LmnError, Subalgebra, Term, TruthTable,
    Valence,
};

use crate::{Cli, Command, Format};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String, io::Error),
    Lmn(LmnError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(path, err) => write!(f, "{path}: {err}"),
            CliError::Lmn(err) => write!(f, "{err}"),
        }
    }
}

impl From<LmnError> for CliError {
    fn from(err: LmnError) -> Self {
        CliError::Lmn(err)
    }
}

type Result<T> = std::result::Result<T, CliError>;

const OK: u8 = 0;
const NEGATIVE: u8 = 1;

pub fn run(cli: &Cli) -> Result<u8> {
    let jobs = cli.jobs;
    match &cli.command {
        Command::Axioms { valence } => {
            let report = verify_axioms(valence_of(valence.n)?);
            println!("{report}");
            Ok(if report.all_pass() { OK } else { NEGATIVE })
        }
        Command::Eval { valence, term, set } => {
            let v = valence_of(valence.n)?;
            let term = parse(term)?;
            let asg = assignment(v, &term, set)?;
            println!("{}", term.eval(&asg)?);
            Ok(OK)
        }
        Command::Table { valence, arity, term, output, format, budget } => {
            let v = valence_of(valence.n)?;
            let arity = *arity as usize;
            check_budget(v, arity, budget.max_table)?;
            let term = parse(term)?;
            let table = term.truth_table_with(arity, v, jobs)?;
            let text = match format {
                Format::Json => format!("{}\n", table.to_json()),
                Format::Csv => table.to_csv(),
                Format::Text => table_text(&table),
            };
            emit(output.as_deref(), &text)?;
            Ok(OK)
        }
        Command::Check { table, format } => {
            let table = read_table(table, *format)?;
            let verdict = check_representable(&table);
            match verdict.counterexample {
                None => {
                    println!("representable");
                    Ok(OK)
                }
                Some(ce) => {
                    println!("{ce}");
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Synthesize { table, format, simplify: simp, output } => {
            let table = read_table(table, *format)?;
            let term = match synthesize(&table) {
                Ok(term) => term,
                Err(LmnError::NotRepresentable(ce)) => {
                    println!("not representable: {ce}");
                    return Ok(NEGATIVE);
                }
                Err(err) => return Err(err.into()),
            };
            let term = if *simp { simplify(&term) } else { term };
            if let Some(m) = first_mismatch(&term, &table, jobs)? {
                return Err(CliError::Usage(format!(
                    "internal error: synthesized term disagrees with the table at {:?}",
                    m.tuple
                )));
            }
            let text = format!("{term}\n");
            if let Some(path) = output {
                write_file(path, &text)?;
            }
            print!("{text}");
            Ok(OK)
        }
        Command::Verify { term, table, term_file, format } => {
            let text = match (term, term_file) {
                (Some(t), _) => t.clone(),
                (None, Some(path)) => read_text(path)?,
                (None, None) => return Err(CliError::Usage("a term or --term-file is required".into())),
            };
            let term = parse(text.trim())?;
            let table = read_table(table, *format)?;
            if term.arity() > table.arity() {
                return Err(CliError::Usage(format!(
                    "term uses x{} but the table has arity {}",
                    term.arity(),
                    table.arity()
                )));
            }
            let v = table.valence();
            match first_mismatch(&term, &table, jobs)? {
                None => {
                    println!("ok: term represents the table");
                    Ok(OK)
                }
                Some(m) => {
                    println!(
                        "mismatch: tuple=({}) expected={} got={}",
                        show_tuple(v, &m.tuple),
                        v.show(m.expected),
                        v.show(m.actual)
                    );
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Subalgebras { valence } => {
            let v = valence_of(valence.n)?;
            for s in enumerate_subalgebras(v) {
                println!("{:>3}  {s}", s.len());
            }
            Ok(OK)
        }
        Command::Free { valence, arity, format, budget } => {
            let v = valence_of(valence.n)?;
            let arity = *arity as usize;
            check_budget(v, arity, budget.max_table)?;
            let report = free_report(v, arity);
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => println!("{report}"),
                Format::Csv => return Err(CliError::Usage("free reports are text or json".into())),
            }
            Ok(if report.checks.all_pass() { OK } else { NEGATIVE })
        }
        Command::DemoImplication { valence } => demo_implication(valence_of(valence.n)?),
    }
}

fn valence_of(n: u32) -> Result<Valence> {
    Ok(Valence::new(n)?)
}

fn check_budget(v: Valence, arity: usize, max: u64) -> Result<()> {
    let size = (v.carrier_size() as u64).checked_pow(arity as u32);
    match size {
        Some(size) if size <= max => Ok(()),
        _ => Err(CliError::Usage(format!(
            "(n+1)^r = {}^{arity} tuples exceeds the budget of {max}; raise it with --max-table",
            v.carrier_size()
        ))),
    }
}

fn variables(term: &Term, out: &mut Vec<u32>) {
    match term {
        Term::Zero | Term::One => {}
        Term::Var(k) => out.push(*k),
        Term::Or(a, b) | Term::And(a, b) => {
            variables(a, out);
            variables(b, out);
        }
        Term::Neg(a) | Term::Delta(_, a) | Term::Jay(_, a) => variables(a, out),
    }
}

fn assignment(v: Valence, term: &Term, bindings: &[String]) -> Result<Assignment> {
    let mut values: Vec<Option<u32>> = vec![None; term.arity()];
    for binding in bindings {
        let (name, value) = binding
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("binding {binding:?} is not of the form xK=VALUE")))?;
        let k: usize = name
            .trim()
            .strip_prefix('x')
            .and_then(|k| k.parse().ok())
            .filter(|&k| k >= 1)
            .ok_or_else(|| CliError::Usage(format!("{name:?} is not a variable name")))?;
        let el = v.parse_element(value)?;
        if values.len() < k {
            values.resize(k, None);
        }
        values[k - 1] = Some(el.numerator());
    }
    let mut used = Vec::new();
    variables(term, &mut used);
    if let Some(&k) = used.iter().find(|&&k| values[k as usize - 1].is_none()) {
        return Err(LmnError::UnboundVariable(k).into());
    }
    // unused gaps are never read
    Ok(Assignment::from_numerators(v, values.into_iter().map(|x| x.unwrap_or(0)).collect())?)
}

fn show_tuple(v: Valence, tuple: &[u32]) -> String {
    tuple.iter().map(|&a| v.show(a)).collect::<Vec<_>>().join(",")
}

fn table_text(table: &TruthTable) -> String {
    let v = table.valence();
    let mut out = String::new();
    for (tuple, value) in table.rows() {
        out.push_str(&format!("({}) -> {}\n", show_tuple(v, &tuple), v.show(value)));
    }
    out
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io("<stdin>".into(), e))?;
        return Ok(buf);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn read_table(path: &Path, format: Option<Format>) -> Result<TruthTable> {
    let text = read_text(path)?;
    let format = format.unwrap_or_else(|| {
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
            Format::Csv
        } else {
            Format::Json
        }
    });
    let table = match format {
        Format::Json => TruthTable::from_json(&text),
        Format::Csv => TruthTable::from_csv(&text),
        Format::Text => return Err(CliError::Usage("tables are read as json or csv".into())),
    };
    table.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => write_file(path, text),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io("<stdout>".into(), e)),
    }
}

fn demo_implication(v: Valence) -> Result<u8> {
    let n = v.n();
    let table = lukasiewicz_implication_table(v);
    println!("Lukasiewicz implication x -> y = min(1, 1 - x + y) on the {}-element chain", v.carrier_size());
    let rose = Subalgebra::new(v, [0, 1, n - 1, n])?;
    println!("subalgebra {rose}");
    let verdict = check_representable(&table);
    if verdict.representable {
        let term = simplify(&synthesize(&table)?);
        if !verify_representation(&term, &table)? {
            return Err(CliError::Usage("internal error: synthesized term does not represent the table".into()));
        }
        println!("{rose} is closed under the implication");
        println!("representable");
        println!("term: {term}");
        return Ok(OK);
    }
    if let Some(ce) = violation_at(&table, &[n - 1, 1]) {
        println!(
            "({} -> {}) = {}, which is not in {rose}",
            v.show(n - 1),
            v.show(1),
            v.show(ce.output)
        );
        println!("not representable: {ce}");
    }
    if let Some(first) = verdict.counterexample {
        if first.tuple != [n - 1, 1] {
            println!("first violation in table order: {first}");
        }
    }
    Ok(NEGATIVE)
}
