//! Machine-readable records and table rendering.

use serde::Serialize;

use ctn_core::{
    sieve, Classification, FamilyMember, SieveVerdict, SumClass, Triple, TripleTable,
};

/// One line of `classify`/`scan` output. Absent optionals are omitted from
/// JSON rather than serialized as null.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub n: u64,
    pub ctn: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub magic_sum: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<[[u64; 3]; 2]>,
    pub triple_count: usize,
    pub omega: u32,
    pub sieve_survivor: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
}

impl OutputRecord {
    pub fn new(c: &Classification) -> OutputRecord {
        let verdict = sieve(c.n).expect("n >= 1");
        OutputRecord {
            n: c.n,
            ctn: c.is_ctn(),
            magic_sum: c.magic_sum(),
            pair: c.pair().map(|[x, y]| [x.entries(), y.entries()]),
            triple_count: c.triple_count,
            omega: verdict.omega,
            sieve_survivor: verdict.survives(),
            reason: c.reason().map(|r| r.tag()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub const CSV_HEADER: &'static str = "n,ctn,magic_sum,a,b,c,d,e,f,triple_count,omega";

    pub fn to_csv(&self) -> String {
        let magic = self.magic_sum.map(|m| m.to_string()).unwrap_or_default();
        let pair = match self.pair {
            Some([x, y]) => format!("{},{},{},{},{},{}", x[0], x[1], x[2], y[0], y[1], y[2]),
            None => ",,,,,".to_string(),
        };
        format!(
            "{},{},{},{},{},{}",
            self.n, self.ctn, magic, pair, self.triple_count, self.omega,
        )
    }
}

#[derive(Debug, Serialize)]
pub struct SieveRecord {
    pub n: u64,
    pub survives: bool,
    pub eliminated_by: &'static str,
    pub omega: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strike: Option<&'static str>,
}

impl SieveRecord {
    pub fn new(v: &SieveVerdict) -> SieveRecord {
        SieveRecord {
            n: v.n,
            survives: v.survives(),
            eliminated_by: v.eliminated_by.tag(),
            omega: v.omega,
            strike: v.strike().map(|s| s.symbol()),
        }
    }

    pub const CSV_HEADER: &'static str = "n,survives,eliminated_by,omega,strike";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n,
            self.survives,
            self.eliminated_by,
            self.omega,
            self.strike.unwrap_or(""),
        )
    }
}

#[derive(Debug, Serialize)]
pub struct TripleRecord {
    pub n: u64,
    pub triple: [u64; 3],
    pub sum: u64,
}

#[derive(Debug, Serialize)]
pub struct CountRecord {
    pub digits: u32,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub largest: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct FamilyRecord {
    pub p: u64,
    pub q: u64,
    pub n: u64,
    pub magic_sum: u64,
    pub rows: Vec<TripleRecord>,
    pub verified: bool,
}

impl FamilyRecord {
    pub fn new(m: &FamilyMember, verified: bool) -> FamilyRecord {
        FamilyRecord {
            p: m.p,
            q: m.q,
            n: m.n,
            magic_sum: m.magic_sum,
            rows: m
                .rows
                .iter()
                .map(|r| TripleRecord { n: m.n, triple: r.triple.entries(), sum: r.sum })
                .collect(),
            verified,
        }
    }
}

pub fn format_triple(t: &Triple) -> String {
    t.to_string()
}

fn format_collisions(collisions: &[SumClass]) -> Vec<String> {
    collisions
        .iter()
        .map(|class| {
            let triples: Vec<String> = class.triples.iter().map(format_triple).collect();
            format!("sum {}: {}", class.sum, triples.join(", "))
        })
        .collect()
}

pub fn classification_table(c: &Classification) -> String {
    let verdict = sieve(c.n).expect("n >= 1");
    let mut out = String::new();
    match c.pair() {
        Some([x, y]) => {
            out.push_str(&format!("{}: census-taker number\n", c.n));
            out.push_str(&format!("  magic sum: {}\n", c.magic_sum().unwrap()));
            out.push_str(&format!("  mysterious triples: {x} / {y}\n"));
        }
        None => {
            out.push_str(&format!(
                "{}: not a census-taker number ({})\n",
                c.n,
                c.reason().unwrap().tag(),
            ));
            if !c.collisions.is_empty() {
                out.push_str("  equal-sum collisions:\n");
                for line in format_collisions(&c.collisions) {
                    out.push_str(&format!("    {line}\n"));
                }
            }
        }
    }
    out.push_str(&format!(
        "  triples: {}, omega: {}, sieve survivor: {}\n",
        c.triple_count,
        verdict.omega,
        if verdict.survives() { "yes" } else { "no" },
    ));
    out
}

pub fn triple_table_text(table: &TripleTable) -> String {
    let mut out = format!("triples with product {} ({} total):\n", table.n(), table.len());
    let width = table
        .triples()
        .iter()
        .map(|t| t.to_string().len())
        .max()
        .unwrap_or(0);
    for t in table.triples() {
        out.push_str(&format!("  {:<width$}  {}\n", t.to_string(), t.sum()));
    }
    let classes = table.equal_sum_classes();
    if classes.is_empty() {
        out.push_str("all sums distinct\n");
    } else {
        for line in format_collisions(&classes) {
            out.push_str(&format!("equal sums at {line}\n"));
        }
    }
    out
}

/// The elimination grid: ten rows, columns filled top to bottom, every
/// eliminated integer prefixed by its strike.
pub fn sieve_grid(verdicts: &[SieveVerdict]) -> String {
    const ROWS: usize = 10;
    let cells: Vec<String> = verdicts
        .iter()
        .map(|v| {
            let mark = v.strike().map(|s| s.symbol()).unwrap_or("");
            format!("{}{}", mark, v.n)
        })
        .collect();
    let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
    let columns = cells.len().div_ceil(ROWS);
    let mut out = String::new();
    for row in 0..ROWS.min(cells.len()) {
        let mut line = String::new();
        for col in 0..columns {
            if let Some(cell) = cells.get(col * ROWS + row) {
                let pad = width - cell.chars().count();
                line.push_str(&" ".repeat(pad + 2));
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn family_member_table(m: &FamilyMember, verified: bool) -> String {
    let mut out = format!(
        "p = {}, 2p-1 = {}, N = p^2(2p-1)^2 = {}, magic sum = 4p^2-2p+1 = {}\n",
        m.p, m.q, m.n, m.magic_sum,
    );
    let form_width = m.rows.iter().map(|r| r.triple_form.len()).max().unwrap_or(0);
    let triple_width = m.rows.iter().map(|r| r.triple.to_string().len()).max().unwrap_or(0);
    let sum_form_width = m.rows.iter().map(|r| r.sum_form.len()).max().unwrap_or(0);
    for r in &m.rows {
        out.push_str(&format!(
            "  {:<form_width$}  = {:<triple_width$}  {:<sum_form_width$}  = {}\n",
            r.triple_form,
            r.triple.to_string(),
            r.sum_form,
            r.sum,
        ));
    }
    out.push_str(&format!(
        "  verification: {}\n",
        if verified { "ok" } else { "FAILED" },
    ));
    out
}
