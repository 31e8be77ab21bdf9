//! Counts of curves and of isomorphism classes weighted by `1/|Aut|`, per
//! Newton polygon and stratum.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::Zero;

use super::newton::NewtonPolygon;
use crate::cli::record::{CurveRecord, Stratum};
use crate::error::{Error, Result};

/// One Newton polygon row: `(slopes, curves [hyp, trig, ci], stack
/// counts [hyp, trig, ci])`, in the published row order.
pub type FixtureRow = (&'static str, [u64; 3], [u64; 3]);

pub const NEWTON_TABLE: [FixtureRow; 13] = [
    ("0^5 1^5", [550, 1417, 1617], [264, 1405, 1524]),
    ("0^4 (1/2)^2 1^4", [156, 623, 868], [76, 610, 838]),
    ("0^3 (1/2)^4 1^3", [108, 404, 672], [52, 402, 574]),
    ("0^2 (1/3)^3 (2/3)^3 1^2", [32, 122, 206], [16, 122, 198]),
    ("0^2 (1/2)^6 1^2", [88, 80, 176], [40, 78, 154]),
    ("0 (1/4)^4 (3/4)^4 1", [0, 64, 88], [0, 64, 88]),
    ("0 (1/3)^3 (1/2)^2 (2/3)^3 1", [48, 24, 40], [24, 24, 32]),
    ("0 (1/2)^8 1", [56, 28, 108], [24, 24, 64]),
    ("(1/5)^5 (4/5)^5", [0, 48, 48], [0, 48, 48]),
    ("(1/4)^4 (1/2)^2 (3/4)^4", [0, 8, 24], [0, 8, 24]),
    ("(1/3)^3 (1/2)^4 (2/3)^3", [16, 18, 26], [8, 14, 18]),
    ("(2/5)^5 (3/5)^5", [8, 4, 4], [4, 4, 4]),
    ("(1/2)^10", [8, 14, 28], [4, 14, 18]),
];

/// Automorphism group orders per stratum as published.
pub const AUT_HISTOGRAMS: [&[(u64, u64)]; 3] = [
    &[(2, 983), (4, 76), (6, 7), (12, 4)],
    &[(1, 2783), (2, 63), (3, 7), (6, 1)],
    &[(1, 3319), (2, 490), (3, 3), (4, 60), (6, 4), (8, 24), (12, 2), (16, 2), (24, 1)],
];

impl NewtonPolygon {
    /// Grouped notation such as `0^2 (1/3)^3 (2/3)^3 1^2`.
    pub fn compact(&self) -> String {
        let mut groups: Vec<(Ratio<i64>, usize)> = Vec::new();
        for s in self.slopes() {
            match groups.last_mut() {
                Some((t, n)) if t == s => *n += 1,
                _ => groups.push((*s, 1)),
            }
        }
        groups
            .iter()
            .map(|(s, n)| {
                let base = if s.is_integer() { s.to_string() } else { format!("({s})") };
                if *n == 1 {
                    base
                } else {
                    format!("{base}^{n}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn from_compact(s: &str) -> Result<Self> {
        let mut slopes = Vec::new();
        for tok in s.split_whitespace() {
            let (base, n) = match tok.rsplit_once('^') {
                Some((b, n)) => (b, n.parse::<usize>().map_err(|_| Error::Parse(format!("bad group {tok:?}")))?),
                None => (tok, 1),
            };
            let base = base.trim_start_matches('(').trim_end_matches(')');
            let one: NewtonPolygon = base.parse()?;
            for _ in 0..n {
                slopes.extend_from_slice(one.slopes());
            }
        }
        slopes.sort();
        Ok(NewtonPolygon(slopes))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub np: NewtonPolygon,
    pub curves: [u64; 3],
    pub stack: [Ratio<i64>; 3],
}

impl TableRow {
    pub fn total_curves(&self) -> u64 {
        self.curves.iter().sum()
    }

    pub fn total_stack(&self) -> Ratio<i64> {
        self.stack.iter().sum()
    }
}

/// Rows in the published order, followed by any other polygon that occurs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonTable {
    pub rows: Vec<TableRow>,
}

pub fn tabulate<'a>(records: impl IntoIterator<Item = &'a CurveRecord>) -> NewtonTable {
    let mut rows: Vec<TableRow> = NEWTON_TABLE
        .iter()
        .map(|(s, _, _)| TableRow {
            np: NewtonPolygon::from_compact(s).expect("fixture parses"),
            curves: [0; 3],
            stack: [Ratio::zero(); 3],
        })
        .collect();
    let mut extra: BTreeMap<NewtonPolygon, usize> = BTreeMap::new();
    for r in records {
        let i = match rows.iter().position(|row| row.np == r.np) {
            Some(i) => i,
            None => *extra.entry(r.np.clone()).or_insert_with(|| {
                rows.push(TableRow { np: r.np.clone(), curves: [0; 3], stack: [Ratio::zero(); 3] });
                rows.len() - 1
            }),
        };
        let s = r.stratum().index();
        rows[i].curves[s] += 1;
        rows[i].stack[s] += Ratio::new(1, r.aut as i64);
    }
    NewtonTable { rows }
}

impl NewtonTable {
    /// Rows differing from the published table, as readable messages.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (row, (s, c, st)) in self.rows.iter().zip(NEWTON_TABLE.iter()) {
            let want_stack = st.map(|x| Ratio::from_integer(x as i64));
            if row.curves != *c || row.stack != want_stack {
                out.push(format!(
                    "{s}: curves {:?} stack {:?}, expected {c:?} {st:?}",
                    row.curves,
                    row.stack.map(|x| x.to_string())
                ));
            }
        }
        for row in self.rows.iter().skip(NEWTON_TABLE.len()) {
            out.push(format!("unexpected Newton polygon {}", row.np.compact()));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("slopes,hyp,trig,ci,total,stack_hyp,stack_trig,stack_ci,stack_total\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{}",
                r.np.compact(),
                r.curves[0],
                r.curves[1],
                r.curves[2],
                r.total_curves(),
                r.stack[0],
                r.stack[1],
                r.stack[2],
                r.total_stack()
            );
        }
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "### Curves per Newton polygon\n");
        let _ = writeln!(s, "| Slopes | Hyp | Trig | ComInt | Total |");
        let _ = writeln!(s, "|---|---:|---:|---:|---:|");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} |",
                r.np.compact(),
                r.curves[0],
                r.curves[1],
                r.curves[2],
                r.total_curves()
            );
        }
        let totals: Vec<u64> = (0..3).map(|i| self.rows.iter().map(|r| r.curves[i]).sum()).collect();
        let _ = writeln!(
            s,
            "| **Total** | {} | {} | {} | {} |",
            totals[0],
            totals[1],
            totals[2],
            totals.iter().sum::<u64>()
        );
        let _ = writeln!(s, "\n### Stack counts per Newton polygon\n");
        let _ = writeln!(s, "| Slopes | Hyp | Trig | ComInt | Total |");
        let _ = writeln!(s, "|---|---:|---:|---:|---:|");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} |",
                r.np.compact(),
                r.stack[0],
                r.stack[1],
                r.stack[2],
                r.total_stack()
            );
        }
        let masses: Vec<Ratio<i64>> = (0..3).map(|i| self.rows.iter().map(|r| r.stack[i]).sum()).collect();
        let _ = writeln!(
            s,
            "| **Total** | {} | {} | {} | {} |",
            masses[0],
            masses[1],
            masses[2],
            masses.iter().sum::<Ratio<i64>>()
        );
        s
    }
}

/// `|Aut| ↦ number of curves` for one stratum.
pub fn aut_histogram<'a>(records: impl IntoIterator<Item = &'a CurveRecord>, stratum: Stratum) -> BTreeMap<u64, u64> {
    let mut h = BTreeMap::new();
    for r in records.into_iter().filter(|r| r.stratum() == stratum) {
        *h.entry(r.aut).or_insert(0) += 1;
    }
    h
}

pub fn aut_histograms_markdown<'a>(records: impl IntoIterator<Item = &'a CurveRecord> + Clone) -> String {
    let mut s = String::new();
    for st in Stratum::ALL {
        let h = aut_histogram(records.clone(), st);
        let _ = writeln!(s, "\n### Automorphism group orders ({st})\n");
        let _ = writeln!(s, "| |Aut| | Curves |");
        let _ = writeln!(s, "|---:|---:|");
        for (a, n) in h {
            let _ = writeln!(s, "| {a} | {n} |");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_round_trip() {
        for (s, c, st) in NEWTON_TABLE {
            let np = NewtonPolygon::from_compact(s).unwrap();
            assert_eq!(np.slopes().len(), 10, "{s}");
            assert!(np.is_symmetric(), "{s}");
            assert_eq!(np.compact(), s);
            assert!(st.iter().zip(c.iter()).all(|(a, b)| a <= b));
        }
    }

    #[test]
    fn fixture_column_sums() {
        let sum = |f: fn(&FixtureRow) -> [u64; 3]| {
            NEWTON_TABLE.iter().map(f).fold([0u64; 3], |acc, x| [acc[0] + x[0], acc[1] + x[1], acc[2] + x[2]])
        };
        assert_eq!(sum(|r| r.1), [1070, 2854, 3905]);
        assert_eq!(sum(|r| r.2), [512, 2817, 3584]);
    }
}
