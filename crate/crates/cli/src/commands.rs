use std::collections::BTreeMap;
use std::env;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use wordrep_core::characterization::{classify_verified, with_orientation_witness, Disagreement};
use wordrep_core::families::{known_orientation, named};
use wordrep_core::graph::{enumerate_graphs, enumerate_graphs_unguarded, parse_graph6, ENUMERATION_GUARD};
use wordrep_core::orientation::{
    count_semi_transitive_extensions, find_semi_transitive_extension, find_semi_transitive_orientation, find_shortcut,
    for_each_semi_transitive_extension, is_semi_transitive,
};
use wordrep_core::split::{check_relative_order, classify_all, is_split, split_partition, HamiltonianCliquePath};
use wordrep_core::word::{alternation_graph, check_represents, find_representant};
use wordrep_core::{FamilyId, Graph, OrientedGraph, Verdict, Witness, Word};

use crate::input::{read_lines, Line};
use crate::{CensusArgs, ClassifyArgs, Failure, Filter, GenerateArgs, OrientArgs};

/// Environment variable that lifts the census size guard.
const LARGE_CENSUS_VAR: &str = "WORDREP_ALLOW_LARGE";

#[derive(Serialize)]
struct Row<'a> {
    graph6: &'a str,
    #[serde(flatten)]
    verdict: &'a Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    isomorphic_to: Option<Option<String>>,
}

fn verdict_text(g6: &str, v: &Verdict) -> String {
    let status = if v.representable { "representable" } else { "non-representable" };
    let mut s = format!("{g6} {status} {}", v.reason);
    match &v.witness {
        Some(Witness::Embedding { pattern, vertices }) => {
            let at: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
            s.push_str(&format!(" witness {pattern} at {}", at.join(",")));
        }
        Some(Witness::Orientation { orientation }) => s.push_str(&format!(" orientation {orientation}")),
        None => {}
    }
    s
}

fn json_line(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn parse_line_graph(line: &Line) -> Result<Graph, String> {
    let g6 = line.fields()[0];
    parse_graph6(g6).map_err(|e| format!("{}: {e}", line.location()))
}

fn disagreement(d: &Disagreement, g: &Graph) -> String {
    format!("{g}: {d}")
}

pub fn classify(a: &ClassifyArgs) -> Result<(), Failure> {
    let lines = read_lines(&a.files)?;
    let start = Instant::now();
    let (mut unparseable, mut disagreements, mut yes, mut no) = (0, 0, 0, 0);
    for line in &lines {
        let g = match parse_line_graph(line) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{e}");
                unparseable += 1;
                continue;
            }
        };
        let verdict = if a.verify {
            match classify_verified(&g) {
                Ok(v) => v,
                Err(d) => {
                    eprintln!("{}: {}", line.location(), disagreement(&d, &g));
                    disagreements += 1;
                    continue;
                }
            }
        } else {
            wordrep_core::classify(&g)
        };
        let verdict = if a.witness { with_orientation_witness(verdict, &g) } else { verdict };
        if verdict.representable {
            yes += 1;
        } else {
            no += 1;
        }
        let g6 = line.fields()[0];
        if a.json {
            println!("{}", json_line(&Row { graph6: g6, verdict: &verdict, isomorphic_to: None }));
        } else {
            println!("{}", verdict_text(g6, &verdict));
        }
    }
    eprintln!(
        "# classify: {} graphs, {yes} representable, {no} non-representable, {:.3} s",
        yes + no,
        start.elapsed().as_secs_f64()
    );
    if disagreements > 0 {
        Err(Failure::Disagreement(format!("{disagreements} verdict(s) contradict the orientation search")))
    } else if unparseable > 0 {
        Err(Failure::Input(format!("{unparseable} unparseable line(s)")))
    } else {
        Ok(())
    }
}

/// Name of a fixed family graph isomorphic to `g`, if any.
fn known_name(g: &Graph) -> Option<String> {
    static NAMED: OnceLock<Vec<(String, Graph)>> = OnceLock::new();
    let named_graphs = NAMED.get_or_init(|| {
        FamilyId::FIXED.iter().map(|id| (id.to_string(), named(id).expect("fixed families build"))).collect()
    });
    named_graphs
        .iter()
        .find(|(_, h)| h.n() == g.n() && h.edge_count() == g.edge_count() && h.is_isomorphic(g))
        .map(|(name, _)| name.clone())
}

pub fn census(a: &CensusArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let graphs = if a.n > ENUMERATION_GUARD {
        if env::var_os(LARGE_CENSUS_VAR).is_none() {
            return Err(Failure::Input(format!(
                "census beyond n = {ENUMERATION_GUARD} is slow; set {LARGE_CENSUS_VAR}=1 to allow it"
            )));
        }
        enumerate_graphs_unguarded(a.n)
    } else {
        enumerate_graphs(a.n).map_err(|e| Failure::Input(e.to_string()))?
    };
    let classes = graphs.len();
    let selected: Vec<Graph> = graphs
        .into_iter()
        .filter(|g| a.filter == Filter::All || is_split(g))
        .filter(|g| !a.connected || g.is_connected())
        .collect();
    let verdicts: Vec<Result<Verdict, Disagreement>> = selected
        .par_iter()
        .map(|g| if a.verify { classify_verified(g) } else { Ok(wordrep_core::classify(g)) })
        .collect();

    let mut by_reason: BTreeMap<String, usize> = BTreeMap::new();
    let (mut non_representable, mut connected_non_representable, mut disagreements) = (0, 0, 0);
    for (g, verdict) in selected.iter().zip(&verdicts) {
        let v = match verdict {
            Ok(v) => v,
            Err(d) => {
                eprintln!("{}", disagreement(d, g));
                disagreements += 1;
                continue;
            }
        };
        *by_reason.entry(v.reason.to_string()).or_default() += 1;
        if v.representable {
            continue;
        }
        non_representable += 1;
        if g.is_connected() {
            connected_non_representable += 1;
        }
        let g6 = g.to_string();
        let name = known_name(g);
        if a.json {
            println!("{}", json_line(&Row { graph6: &g6, verdict: v, isomorphic_to: Some(name) }));
        } else {
            println!("{} {}", verdict_text(&g6, v), name.as_deref().unwrap_or("-"));
        }
    }
    let filter = match a.filter {
        Filter::All => "all",
        Filter::Split => "split",
    };
    let seconds = start.elapsed().as_secs_f64();
    if a.json {
        let summary = json!({"summary": {
            "n": a.n, "filter": filter, "connected_only": a.connected, "classes": classes,
            "examined": selected.len(), "non_representable": non_representable,
            "connected_non_representable": connected_non_representable, "by_reason": by_reason,
        }});
        println!("{}", json_line(&summary));
    } else {
        let reasons: Vec<String> = by_reason.iter().map(|(r, c)| format!("{r}={c}")).collect();
        println!(
            "# census n={} filter={filter}{}: {classes} classes, {} examined, {non_representable} non-representable \
             ({connected_non_representable} connected); {}",
            a.n,
            if a.connected { " connected" } else { "" },
            selected.len(),
            reasons.join(" "),
        );
    }
    eprintln!("# census: {seconds:.2} s");
    if disagreements > 0 {
        return Err(Failure::Disagreement(format!("{disagreements} verdict(s) contradict the orientation search")));
    }
    match a.expected {
        Some(e) if e != non_representable => {
            Err(Failure::Mismatch(format!("expected {e} non-representable graphs, found {non_representable}")))
        }
        _ => Ok(()),
    }
}

fn parse_tag(tag: &str, params: &[usize]) -> Result<FamilyId, Failure> {
    let id = if params.is_empty() { tag.parse::<FamilyId>() } else { FamilyId::from_parts(tag, params) };
    id.map_err(|e| Failure::Input(e.to_string()))
}

pub fn generate(a: &GenerateArgs) -> Result<(), Failure> {
    let id = parse_tag(&a.tag, &a.params)?;
    let g = named(&id).map_err(|e| Failure::Input(e.to_string()))?;
    if !a.orientation && !a.dot {
        println!("{g}");
        return Ok(());
    }
    let known = known_orientation(&id).map_err(|e| Failure::Input(e.to_string()))?;
    if let Some(og) = &known {
        if !is_semi_transitive(og) {
            return Err(Failure::Disagreement(format!("the constructed orientation of {id} has a shortcut")));
        }
    }
    match known.or_else(|| find_semi_transitive_orientation(&g)) {
        Some(og) if a.dot => print!("{}", og.to_dot()),
        Some(og) => println!("{g} {}", og.bitstring()),
        None if a.dot => return Err(Failure::Mismatch(format!("{id} has no semi-transitive orientation"))),
        None => println!("{g} none"),
    }
    Ok(())
}

fn parse_arc(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Input(format!("arc {s:?} is not of the form U>V"));
    let (u, v) = s.split_once('>').ok_or_else(bad)?;
    Ok((u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?))
}

fn print_orientation(g: &Graph, og: &OrientedGraph, dot: bool) {
    if dot {
        print!("{}", og.to_dot());
    } else {
        println!("{g} {}", og.bitstring());
    }
}

/// Path order and per-vertex reports, two-space indented, as JSON.
fn print_types(og: &OrientedGraph) -> Result<(), String> {
    let sp = split_partition(og.base()).ok_or("--classify-types needs a split graph")?;
    let path = HamiltonianCliquePath::new(&sp, og).map_err(|e| e.to_string())?;
    println!("  {}", json!({"clique_path": path.order()}));
    let reports = classify_all(&sp, og).map_err(|e| e.to_string())?;
    for r in &reports {
        println!("  {}", json_line(r));
    }
    if let Ok(violations) = check_relative_order(&sp, &reports) {
        for v in violations {
            println!("  {}", json!({"violation": v}));
        }
    }
    Ok(())
}

fn orient_given(a: &OrientArgs, g: &Graph, bits: &str) -> Result<(), String> {
    if a.all || a.count || a.fix_clique || !a.fix.is_empty() {
        return Err("an orientation was given; --all, --count and --fix do not apply".into());
    }
    let og = OrientedGraph::from_bitstring(g, bits).map_err(|e| e.to_string())?;
    let status = match find_shortcut(&og) {
        Err(_) => "cyclic".to_string(),
        Ok(None) => "semi-transitive".to_string(),
        Ok(Some(w)) => {
            let path: Vec<String> = w.path.iter().map(|v| v.to_string()).collect();
            format!("shortcut {}", path.join(">"))
        }
    };
    println!("{g} {bits} {status}");
    if a.classify_types {
        print_types(&og)?;
    }
    Ok(())
}

fn orient_search(a: &OrientArgs, g: &Graph, fixed_arcs: &[(usize, usize)]) -> Result<(), String> {
    if a.classify_types && !is_split(g) {
        return Err("--classify-types needs a split graph".into());
    }
    let mut fixed = fixed_arcs.to_vec();
    if a.fix_clique {
        let sp = split_partition(g).ok_or("--fix-clique needs a split graph")?;
        let clique = sp.clique().to_vec();
        for (i, &u) in clique.iter().enumerate() {
            fixed.extend(clique[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    if a.count {
        let c = count_semi_transitive_extensions(g, &fixed).map_err(|e| e.to_string())?;
        println!("{g} {c}");
        return Ok(());
    }
    let mut found = false;
    let mut failure = None;
    let mut emit = |og: &OrientedGraph| {
        found = true;
        print_orientation(g, og, a.dot);
        if a.classify_types {
            if let Err(e) = print_types(og) {
                failure = Some(e);
                return false;
            }
        }
        a.all
    };
    if a.all {
        for_each_semi_transitive_extension(g, &fixed, &mut emit).map_err(|e| e.to_string())?;
    } else if let Some(og) = find_semi_transitive_extension(g, &fixed).map_err(|e| e.to_string())? {
        emit(&og);
    }
    if let Some(e) = failure {
        return Err(e);
    }
    if !found {
        println!("{g} none");
    }
    Ok(())
}

pub fn orient(a: &OrientArgs) -> Result<(), Failure> {
    let fixed: Vec<(usize, usize)> = a.fix.iter().map(|s| parse_arc(s)).collect::<Result<_, _>>()?;
    let lines = read_lines(&a.files)?;
    let mut errors = 0;
    for line in &lines {
        let outcome = parse_line_graph(line).and_then(|g| match line.fields().get(1) {
            Some(bits) => orient_given(a, &g, bits),
            None => orient_search(a, &g, &fixed),
        });
        if let Err(e) = outcome {
            eprintln!("{}: {e}", line.location());
            errors += 1;
        }
    }
    if errors > 0 {
        Err(Failure::Input(format!("{errors} input line(s) failed")))
    } else {
        Ok(())
    }
}

fn parse_word(s: &str, one_based: bool) -> Result<Word, Failure> {
    let w: Word = s.parse().map_err(|e| Failure::Input(format!("{e}")))?;
    if !one_based {
        return Ok(w);
    }
    if w.letters().contains(&0) {
        return Err(Failure::Input(format!("{s}: letter 0 in a one-based word")));
    }
    Ok(w.shifted_down(1))
}

fn parse_graph(s: &str) -> Result<Graph, Failure> {
    parse_graph6(s).map_err(|e| Failure::Input(format!("{s}: {e}")))
}

pub fn word_check(word: &str, graph6: &str, one_based: bool) -> Result<(), Failure> {
    let w = parse_word(word, one_based)?;
    let g = parse_graph(graph6)?;
    match check_represents(&w, &g) {
        Ok(()) => {
            println!("{w} represents {g}");
            Ok(())
        }
        Err(m) => Err(Failure::Mismatch(format!("{w} does not represent {g}: {m}"))),
    }
}

pub fn word_graph(word: &str, one_based: bool) -> Result<(), Failure> {
    let w = parse_word(word, one_based)?;
    let n = w.letters().iter().max().map_or(0, |&m| m + 1);
    let g = alternation_graph(&w, n).map_err(|e| Failure::Input(e.to_string()))?;
    println!("{g}");
    Ok(())
}

pub fn word_find(graph6: &str, max_k: usize) -> Result<(), Failure> {
    let g = parse_graph(graph6)?;
    match find_representant(&g, max_k) {
        Some(w) => println!("{w}"),
        None => println!("none"),
    }
    Ok(())
}
