//! Subcommand drivers, kept apart from argument parsing so they can be
//! exercised directly against in-memory buffers.

use std::io::{self, BufRead, Write};

use serde_json::json;
use surreal_core::laws::{self, Filter};
use surreal_core::{Arena, Side, Tree};

use crate::eval::{self, NodeReport, Value};
use crate::expr;

/// Tuple cap for one law run; generous next to the desk-scale corpora.
pub const LAW_TUPLE_LIMIT: u64 = 1_000_000;

/// How `tree` renders its output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFormat {
    Json,
    Dot,
}

/// A failed run: what to tell stderr and which code to exit with.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn eval(message: impl std::fmt::Display) -> Failure {
        Failure { code: 1, message: message.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

/// `eval <expr> [--json]`.
pub fn eval_cmd(
    budget: usize,
    src: &str,
    json_out: bool,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let ast = expr::parse(src).map_err(|e| Failure::usage(e.to_string()))?;
    let mut arena = Arena::with_budget(budget);
    let value = eval::eval(&mut arena, &ast).map_err(Failure::eval)?;
    match value {
        Value::Node(x) => {
            let r = NodeReport::build(&mut arena, x).map_err(Failure::eval)?;
            if json_out {
                let line = json!({
                    "expr": src,
                    "canonical": r.canonical,
                    "value": r.value,
                    "birthday": r.birthday,
                    "signs": r.signs,
                });
                writeln!(out, "{line}")?;
            } else {
                writeln!(out, "canonical: {}", r.canonical)?;
                writeln!(out, "value: {}", r.value)?;
                writeln!(out, "birthday: {}", r.birthday)?;
                writeln!(out, "signs: {}", r.signs)?;
            }
        }
        other => {
            if json_out {
                let line = json!({ "expr": src, "result": scalar_json(&other) });
                writeln!(out, "{line}")?;
            } else {
                writeln!(out, "{}", scalar_text(&other))?;
            }
        }
    }
    Ok(())
}

fn scalar_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Node(_) => unreachable!("nodes take the report path"),
        Value::Bool(b) => json!(b),
        Value::Dyadic(d) => json!(d.to_string()),
        Value::Int(n) => match u64::try_from(n) {
            Ok(small) => json!(small),
            Err(_) => json!(n.to_string()),
        },
        Value::Signs(seq) => json!(seq.to_string()),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Node(_) => unreachable!("nodes take the report path"),
        Value::Bool(b) => b.to_string(),
        Value::Dyadic(d) => d.to_string(),
        Value::Int(n) => n.to_string(),
        Value::Signs(seq) => seq.to_string(),
    }
}

/// `tree --days N [--format json|dot] [--check]`.
pub fn tree_cmd(
    budget: usize,
    days: u32,
    format: TreeFormat,
    check: bool,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let mut arena = Arena::with_budget(budget);
    let tree = Tree::generate(&mut arena, days).map_err(Failure::eval)?;
    match format {
        TreeFormat::Json => emit_tree_json(&mut arena, &tree, out)?,
        TreeFormat::Dot => emit_tree_dot(&mut arena, &tree, out)?,
    }
    if !check {
        return Ok(());
    }
    let report = tree.check_conditions(&mut arena).map_err(Failure::eval)?;
    for entry in &report.entries {
        match format {
            TreeFormat::Json => {
                let line = json!({
                    "condition": entry.condition,
                    "checked": entry.checked,
                    "violations": entry.violations,
                });
                writeln!(out, "{line}")?;
            }
            TreeFormat::Dot => {
                writeln!(
                    out,
                    "# {}: {} checked, {} violations",
                    entry.condition,
                    entry.checked,
                    entry.violations.len()
                )?;
                for v in &entry.violations {
                    writeln!(out, "#   {v}")?;
                }
            }
        }
    }
    let violations = report.total_violations();
    if violations > 0 {
        return Err(Failure::eval(format!("{violations} condition violations")));
    }
    Ok(())
}

fn emit_tree_json(arena: &mut Arena, tree: &Tree, out: &mut impl Write) -> Result<(), Failure> {
    for (day, level) in tree.days().iter().enumerate() {
        let nodes: Vec<serde_json::Value> = level
            .iter()
            .map(|n| {
                let value = arena.value(n.id).to_string();
                let parent = n.parent.map(|p| arena.value(p).to_string());
                json!({ "value": value, "parent": parent, "sign": side_mark(n.side) })
            })
            .collect();
        writeln!(out, "{}", json!({ "day": day, "nodes": nodes }))?;
    }
    Ok(())
}

fn side_mark(side: Side) -> &'static str {
    match side {
        Side::Root => "",
        Side::Left => "-",
        Side::Right => "+",
    }
}

fn emit_tree_dot(arena: &mut Arena, tree: &Tree, out: &mut impl Write) -> Result<(), Failure> {
    writeln!(out, "digraph tree {{")?;
    for level in tree.days() {
        for n in level {
            let value = arena.value(n.id).to_string();
            writeln!(out, "  \"{value}\" [label=\"{value}\"];")?;
        }
    }
    for level in tree.days() {
        for n in level {
            if let Some(p) = n.parent {
                let parent = arena.value(p).to_string();
                let child = arena.value(n.id).to_string();
                writeln!(out, "  \"{parent}\" -> \"{child}\" [label=\"{}\"];", side_mark(n.side))?;
            }
        }
    }
    writeln!(out, "}}")?;
    Ok(())
}

/// `laws [--law NAME] [--max-day D] [--positive]`.
pub fn laws_cmd(
    budget: usize,
    law: Option<&str>,
    max_day: u32,
    positive: bool,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let specs: Vec<&laws::LawSpec> = match law {
        Some(name) => {
            let spec = laws::find(name).ok_or_else(|| {
                Failure::usage(format!(
                    "unknown law '{name}'; names: {}",
                    laws::REGISTRY.iter().map(|l| l.name).collect::<Vec<_>>().join(", ")
                ))
            })?;
            vec![spec]
        }
        None => laws::REGISTRY.iter().collect(),
    };

    let mut arena = Arena::with_budget(budget);
    let mut failures = 0u64;
    for spec in specs {
        let filter = if positive { Filter::Positive } else { spec.filter };
        let corpus = laws::corpus(&mut arena, max_day, filter).map_err(Failure::eval)?;
        let report =
            laws::check(&mut arena, spec, &corpus, LAW_TUPLE_LIMIT).map_err(Failure::eval)?;
        let line = json!({
            "law": report.law,
            "corpus": report.corpus,
            "tuples_checked": report.tuples_checked,
            "failures": report.failures,
            "counterexamples": report.counterexamples,
        });
        writeln!(out, "{line}")?;
        failures += report.failures;
    }
    if failures > 0 {
        return Err(Failure::eval(format!("{failures} failing tuples")));
    }
    Ok(())
}

/// `repl`: evaluates stdin line by line against one persistent arena.
/// Prompts go to stderr so piped transcripts stay clean.
pub fn repl_cmd(
    budget: usize,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let mut arena = Arena::with_budget(budget);
    let mut line = String::new();
    loop {
        eprint!("surreal> ");
        line.clear();
        if input.read_line(&mut line)? == 0 {
            return Ok(());
        }
        let src = line.trim();
        if src.is_empty() {
            continue;
        }
        if src == ":quit" || src == ":q" {
            return Ok(());
        }
        match expr::parse(src).map_err(|e| e.to_string()).and_then(|ast| {
            eval::eval(&mut arena, &ast).map_err(|e| e.to_string())
        }) {
            Err(message) => writeln!(out, "error: {message}")?,
            Ok(Value::Node(x)) => match NodeReport::build(&mut arena, x) {
                Err(e) => writeln!(out, "error: {e}")?,
                Ok(r) => writeln!(
                    out,
                    "{} = {} [birthday {}, signs \"{}\"]",
                    r.canonical, r.value, r.birthday, r.signs
                )?,
            },
            Ok(other) => writeln!(out, "{}", scalar_text(&other))?,
        }
    }
}

/// The arena budget: `SURREAL_NODE_BUDGET` when set, the library default
/// otherwise.
pub fn budget_from_env() -> Result<usize, Failure> {
    match std::env::var("SURREAL_NODE_BUDGET") {
        Err(std::env::VarError::NotPresent) => Ok(surreal_core::DEFAULT_NODE_BUDGET),
        Err(e) => Err(Failure::usage(format!("SURREAL_NODE_BUDGET: {e}"))),
        Ok(text) => text
            .parse()
            .map_err(|e| Failure::usage(format!("SURREAL_NODE_BUDGET '{text}': {e}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_eval(src: &str, json_out: bool) -> (String, Option<Failure>) {
        let mut out = Vec::new();
        let err = eval_cmd(surreal_core::DEFAULT_NODE_BUDGET, src, json_out, &mut out).err();
        (String::from_utf8(out).unwrap(), err)
    }

    #[test]
    fn eval_json_schema_for_the_empty_cut() {
        let (out, err) = run_eval("{|}", true);
        assert!(err.is_none());
        assert_eq!(
            out,
            "{\"expr\":\"{|}\",\"canonical\":\"{|}\",\"value\":\"0\",\"birthday\":0,\"signs\":\"\"}\n"
        );
    }

    #[test]
    fn eval_text_lists_the_four_fields() {
        let (out, err) = run_eval("3/4", false);
        assert!(err.is_none());
        assert_eq!(out, "canonical: {1/2|1}\nvalue: 3/4\nbirthday: 3\nsigns: +-+\n");
    }

    #[test]
    fn eval_reports_booleans() {
        let (out, err) = run_eval("{0|1} + {0|1} == 1", true);
        assert!(err.is_none());
        assert_eq!(out, "{\"expr\":\"{0|1} + {0|1} == 1\",\"result\":true}\n");
    }

    #[test]
    fn eval_syntax_errors_are_usage_errors() {
        let (_, err) = run_eval("1 + * 2", false);
        let failure = err.unwrap();
        assert_eq!(failure.code, 2);
        assert!(failure.message.contains("offset 4"));
    }

    #[test]
    fn eval_cut_violations_are_eval_failures() {
        let (_, err) = run_eval("{1|0}", false);
        assert_eq!(err.unwrap().code, 1);
    }

    #[test]
    fn tree_json_day_two() {
        let mut out = Vec::new();
        tree_cmd(surreal_core::DEFAULT_NODE_BUDGET, 2, TreeFormat::Json, false, &mut out)
            .unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(
            lines[0],
            "{\"day\":0,\"nodes\":[{\"value\":\"0\",\"parent\":null,\"sign\":\"\"}]}"
        );
        assert_eq!(
            lines[2],
            concat!(
                "{\"day\":2,\"nodes\":[",
                "{\"value\":\"-2\",\"parent\":\"-1\",\"sign\":\"-\"},",
                "{\"value\":\"-1/2\",\"parent\":\"-1\",\"sign\":\"+\"},",
                "{\"value\":\"1/2\",\"parent\":\"1\",\"sign\":\"-\"},",
                "{\"value\":\"2\",\"parent\":\"1\",\"sign\":\"+\"}]}"
            )
        );
    }

    #[test]
    fn tree_dot_is_a_digraph_with_parent_edges() {
        let mut out = Vec::new();
        tree_cmd(surreal_core::DEFAULT_NODE_BUDGET, 1, TreeFormat::Dot, false, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("digraph tree {\n"));
        assert!(text.contains("  \"0\" -> \"-1\" [label=\"-\"];\n"));
        assert!(text.contains("  \"0\" -> \"1\" [label=\"+\"];\n"));
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn tree_check_passes_cleanly() {
        let mut out = Vec::new();
        tree_cmd(surreal_core::DEFAULT_NODE_BUDGET, 3, TreeFormat::Json, true, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("\"violations\":[]"));
    }

    #[test]
    fn laws_single_run_reports_zero_failures() {
        let mut out = Vec::new();
        laws_cmd(surreal_core::DEFAULT_NODE_BUDGET, Some("ADD_COMM"), 2, false, &mut out)
            .unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("\"law\":\"ADD_COMM\""));
        assert!(text.contains("\"failures\":0"));
    }

    #[test]
    fn laws_unknown_name_is_a_usage_error() {
        let mut out = Vec::new();
        let err =
            laws_cmd(surreal_core::DEFAULT_NODE_BUDGET, Some("NO_SUCH"), 2, false, &mut out)
                .unwrap_err();
        assert_eq!(err.code, 2);
    }

    #[test]
    fn repl_evaluates_until_quit() {
        let mut input = io::Cursor::new(b"1/2 + 1/2\n:quit\n1\n".to_vec());
        let mut out = Vec::new();
        repl_cmd(surreal_core::DEFAULT_NODE_BUDGET, &mut input, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text, "{0|} = 1 [birthday 1, signs \"+\"]\n");
    }

    #[test]
    fn repl_prints_errors_and_continues() {
        let mut input = io::Cursor::new(b"{1|0}\n2 < 3\n".to_vec());
        let mut out = Vec::new();
        repl_cmd(surreal_core::DEFAULT_NODE_BUDGET, &mut input, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("error: "));
        assert!(text.ends_with("true\n"));
    }
}
