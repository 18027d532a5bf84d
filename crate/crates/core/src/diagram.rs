//! DOT and TikZ renderings of hom posets, of the poset-enriched categories over
//! `Δ^n`, and of the Szczarba map on a single hom.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hom::{enumerate_nerve, hasse_edges, GHom, HomPoset, PosetElement, SubsetHom};
use crate::sz::hin_vertex;

/// Which of the two poset-enriched categories.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[derive(clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Subsets ordered by reverse inclusion.
    C,
    /// Products of the linear orders `⟨g_k⟩^{n-k}`.
    G,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The Hasse diagram of one hom poset.
pub fn hom_dot<H: HomPoset>(hom: &H, name: &str) -> String {
    let elements = hom.elements();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (idx, e) in elements.iter().enumerate() {
        writeln!(out, "  e{idx} [label={}];", quote(&e.to_string())).unwrap();
    }
    for (a, b) in hasse_edges(hom) {
        writeln!(out, "  e{a} -> e{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn c_hom_label(hom: &SubsetHom) -> String {
    let elements = hom.elements();
    let chain = elements.windows(2).all(|w| w[0].poset_le(&w[1]));
    let sep = if chain { " ≤ " } else { ", " };
    elements.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(sep)
}

fn g_hom_label(hom: &GHom) -> String {
    let factors: Vec<String> = (hom.p + 1..=hom.q)
        .rev()
        .map(|k| format!("⟨g_{k}⟩^{}", hom.n - k))
        .collect();
    let elements = hom.elements();
    let chain = elements.windows(2).all(|w| w[0].poset_le(&w[1]));
    if chain {
        let shown: Vec<String> = if hom.q - hom.p == 1 {
            elements.iter().flat_map(|e| e.components()).map(|c| c.to_string()).collect()
        } else {
            elements.iter().map(|e| e.to_string()).collect()
        };
        format!("{} = {{{}}}", factors.join(" × "), shown.join(" ≤ "))
    } else {
        format!("{} ({} elements)", factors.join(" × "), elements.len())
    }
}

/// Objects `0..=n` with an arrow `p -> q` for every `p < q`, labelled by its hom poset.
pub fn category_dot(n: usize, family: Family) -> Result<String> {
    let mut out = String::new();
    let name = match family {
        Family::C => format!("P_c(Δ^{n})"),
        Family::G => format!("P_G(Δ^{n})"),
    };
    writeln!(out, "digraph {} {{", quote(&name)).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    for obj in 0..=n {
        writeln!(out, "  o{obj} [label=\"{obj}\"];").unwrap();
    }
    for q in 1..=n {
        for p in 0..q {
            let label = match family {
                Family::C => c_hom_label(&SubsetHom::new(n, p, q)?),
                Family::G => g_hom_label(&GHom::new(n, p, q)?),
            };
            writeln!(out, "  o{p} -> o{q} [label={}];", quote(&label)).unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Data shared by the two-panel renderings: the subset hom with all its
/// nondegenerate 1-simplices, the loop-group hom with its Hasse diagram, and the
/// image of the former in the latter.
struct SzFigure {
    c_labels: Vec<String>,
    c_edges: Vec<(usize, usize)>,
    c_rank: Vec<usize>,
    g_labels: Vec<String>,
    g_hasse: Vec<(usize, usize)>,
    g_rank: Vec<usize>,
    image_nodes: BTreeSet<usize>,
    image_edges: BTreeSet<(usize, usize)>,
}

impl SzFigure {
    fn new(n: usize, p: usize, q: usize) -> Result<Self> {
        let c = SubsetHom::new(n, p, q)?;
        let g = GHom::new(n, p, q)?;
        let c_elements = c.elements();
        let g_elements = g.elements();
        let c_index = |e: &crate::hom::SubsetMorphism| c_elements.iter().position(|x| x == e).expect("element of hom");
        let g_index = |e: &crate::hom::GHomElement| g_elements.iter().position(|x| x == e).expect("element of hom");

        let c_edges: Vec<(usize, usize)> = enumerate_nerve(&c, 1, true)
            .iter()
            .map(|ch| (c_index(&ch.entries()[0]), c_index(&ch.entries()[1])))
            .collect();
        let image: Vec<usize> = c_elements.iter().map(|u| g_index(&hin_vertex(u))).collect();
        let image_nodes = image.iter().copied().collect();
        let image_edges = c_edges
            .iter()
            .map(|&(a, b)| (image[a], image[b]))
            .filter(|(a, b)| a != b)
            .collect();

        Ok(SzFigure {
            c_labels: c_elements.iter().map(|e| e.to_string()).collect(),
            c_rank: c_elements.iter().map(|e| q - p + 1 - e.members().len()).collect(),
            c_edges,
            g_labels: g_elements.iter().map(|e| e.to_string()).collect(),
            g_rank: g_elements.iter().map(|e| e.positions().iter().sum()).collect(),
            g_hasse: hasse_edges(&g),
            image_nodes,
            image_edges,
        })
    }
}

/// Left: the subset hom and its nondegenerate 1-simplices. Right: the loop-group
/// hom with its Hasse diagram; the image of the Szczarba map is drawn in red.
pub fn sz_figure_dot(n: usize, p: usize, q: usize) -> Result<String> {
    let fig = SzFigure::new(n, p, q)?;
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&format!("Sz_Δ{n}({p},{q})"))).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    writeln!(out, "  subgraph cluster_c {{").unwrap();
    writeln!(out, "    label={};", quote(&format!("𝔠(Δ^{n})({p},{q})"))).unwrap();
    for (idx, l) in fig.c_labels.iter().enumerate() {
        writeln!(out, "    c{idx} [label={}];", quote(l)).unwrap();
    }
    for (a, b) in &fig.c_edges {
        writeln!(out, "    c{a} -> c{b};").unwrap();
    }
    writeln!(out, "  }}").unwrap();
    writeln!(out, "  subgraph cluster_g {{").unwrap();
    writeln!(out, "    label={};", quote(&format!("G(Δ^{n})({p},{q})"))).unwrap();
    for (idx, l) in fig.g_labels.iter().enumerate() {
        let color = if fig.image_nodes.contains(&idx) { ", fontcolor=red" } else { "" };
        writeln!(out, "    g{idx} [label={}{color}];", quote(l)).unwrap();
    }
    for (a, b) in &fig.g_hasse {
        if !fig.image_edges.contains(&(*a, *b)) {
            writeln!(out, "    g{a} -> g{b};").unwrap();
        }
    }
    for (a, b) in &fig.image_edges {
        writeln!(out, "    g{a} -> g{b} [color=red];").unwrap();
    }
    writeln!(out, "  }}").unwrap();
    out.push_str("}\n");
    Ok(out)
}

fn tikz_escape(label: &str) -> String {
    label.replace('{', "\\{").replace('}', "\\}")
}

fn tikz_math(label: &str) -> String {
    // `d_1^3 d_0 g_1` renders as-is in math mode once braces are escaped
    format!("${}$", tikz_escape(label))
}

/// The same picture as [`sz_figure_dot`], as a standalone `tikzpicture`.
pub fn sz_figure_tikz(n: usize, p: usize, q: usize) -> Result<String> {
    let fig = SzFigure::new(n, p, q)?;
    let mut out = String::new();
    writeln!(out, "\\begin{{tikzpicture}}[x=1cm,y=1cm,>=stealth]").unwrap();

    let place = |ranks: &[usize], x0: f64| -> Vec<(f64, f64)> {
        let mut seen = vec![0usize; ranks.iter().max().map_or(1, |m| m + 1)];
        ranks
            .iter()
            .map(|&r| {
                let slot = seen[r];
                seen[r] += 1;
                (x0 + slot as f64 * 3.0, r as f64 * 1.5)
            })
            .collect()
    };
    let c_pos = place(&fig.c_rank, 0.0);
    let c_width = c_pos.iter().map(|p| p.0).fold(0.0, f64::max);
    let g_pos = place(&fig.g_rank, c_width + 5.0);

    for (idx, (l, (x, y))) in fig.c_labels.iter().zip(&c_pos).enumerate() {
        writeln!(out, "  \\node (c{idx}) at ({x:.1},{y:.1}) {{{}}};", tikz_math(l)).unwrap();
    }
    for (idx, (l, (x, y))) in fig.g_labels.iter().zip(&g_pos).enumerate() {
        let style = if fig.image_nodes.contains(&idx) { "[red]" } else { "" };
        writeln!(out, "  \\node{style} (g{idx}) at ({x:.1},{y:.1}) {{{}}};", tikz_math(l)).unwrap();
    }
    for (a, b) in &fig.c_edges {
        writeln!(out, "  \\draw[->] (c{a}) -- (c{b});").unwrap();
    }
    for (a, b) in &fig.g_hasse {
        if !fig.image_edges.contains(&(*a, *b)) {
            writeln!(out, "  \\draw[->] (g{a}) -- (g{b});").unwrap();
        }
    }
    for (a, b) in &fig.image_edges {
        writeln!(out, "  \\draw[->,red] (g{a}) -- (g{b});").unwrap();
    }
    writeln!(out, "\\end{{tikzpicture}}").unwrap();
    Ok(out)
}
