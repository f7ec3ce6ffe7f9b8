use std::fmt::Write as _;

use crate::atlas::AtlasRecord;

/// One JSON object per line.
pub fn to_jsonl(records: &[AtlasRecord]) -> String {
    let mut out = String::new();
    for rec in records {
        out.push_str(&serde_json::to_string(rec).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Header `word,length,codim,sandwich,locus,adjacencies`; list fields are
/// joined with `;`.
pub fn to_csv(records: &[AtlasRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "word",
        "length",
        "codim",
        "sandwich",
        "locus",
        "adjacencies",
    ])
    .expect("in-memory write");
    for rec in records {
        let join = |items: Vec<String>| items.join(";");
        w.write_record([
            rec.word.to_string(),
            rec.length.to_string(),
            rec.codimension.to_string(),
            rec.sandwich.to_string(),
            join(rec.locus.iter().map(ToString::to_string).collect()),
            join(rec.adjacencies.iter().map(ToString::to_string).collect()),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flushed")).expect("ascii")
}

/// Adjacency graph; nodes carry their codimension.
pub fn to_dot(records: &[AtlasRecord]) -> String {
    let mut out = String::from("digraph atlas {\n  rankdir=LR;\n");
    for rec in records {
        writeln!(
            out,
            "  \"{}\" [label=\"{}\\ncodim {}\"];",
            rec.word, rec.word, rec.codimension
        )
        .unwrap();
    }
    for rec in records {
        for t in &rec.adjacencies {
            writeln!(out, "  \"{}\" -> \"{}\";", rec.word, t).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
