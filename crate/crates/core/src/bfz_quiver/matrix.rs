use serde::Serialize;

use crate::cartan_graph::CartanMatrix;
use crate::coxeter_words::{Index, ShuffledWord, SuccessorMap};

use super::quiver::Quiver;

/// `B̃(i)`: rows are all indices, columns the exchangeable ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeMatrix {
    pub rows: Vec<Index>,
    pub columns: Vec<Index>,
    /// Row-major: `entries[row][column]`.
    pub entries: Vec<Vec<i32>>,
}

impl ExchangeMatrix {
    pub fn get(&self, k: Index, l: Index) -> Option<i32> {
        let i = self.rows.iter().position(|&x| x == k)?;
        let j = self.columns.iter().position(|&x| x == l)?;
        Some(self.entries[i][j])
    }

    pub fn column(&self, l: Index) -> Option<Vec<i32>> {
        let j = self.columns.iter().position(|&x| x == l)?;
        Some(self.entries.iter().map(|row| row[j]).collect())
    }

    /// Quiver whose arrows are read off the nonzero entries: `b_kl > 0` gives
    /// `b_kl` arrows `k -> l`.
    pub fn to_quiver(&self, w: &ShuffledWord, s: &SuccessorMap) -> Quiver {
        let mut q = Quiver::on_word(w, s);
        for (i, &k) in self.rows.iter().enumerate() {
            for (j, &l) in self.columns.iter().enumerate() {
                let b = self.entries[i][j];
                // Entries between two exchangeable indices appear twice; read each pair once.
                if s.is_exchangeable(k) && k > l {
                    continue;
                }
                for _ in 0..b.unsigned_abs() {
                    if b > 0 {
                        q.add_arrow(k, l);
                    } else {
                        q.add_arrow(l, k);
                    }
                }
            }
        }
        q
    }
}

/// One row of the computation of `b_kl`. Fields not needed to decide the
/// entry are left empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryTrace {
    pub k: Index,
    pub l: Index,
    pub p: Index,
    pub q: Index,
    pub eps_p: Option<i32>,
    pub eps_q: Option<i32>,
    pub sgn_k_l: Option<i32>,
    pub sgn_kplus_lplus: Option<i32>,
    pub cartan: Option<i32>,
    pub b: i32,
}

fn sign_at(w: &ShuffledWord, k: Index) -> i32 {
    if w.contains(k) {
        w.sign(k).value()
    } else {
        // q = n + 1 needs k⁺ = l⁺ = n + 1, and then sgn(k⁺ - l⁺) = 0 anyway.
        1
    }
}

pub fn entry_trace(
    w: &ShuffledWord,
    s: &SuccessorMap,
    c: &CartanMatrix,
    k: Index,
    l: Index,
) -> EntryTrace {
    let (kp, lp) = (s.plus(k), s.plus(l));
    let p = k.max(l);
    let q = kp.min(lp);
    let mut t = EntryTrace {
        k,
        l,
        p,
        q,
        eps_p: None,
        eps_q: None,
        sgn_k_l: None,
        sgn_kplus_lplus: None,
        cartan: None,
        b: 0,
    };
    if p > q {
        return t;
    }
    let (ep, eq) = (sign_at(w, p), sign_at(w, q));
    let skl = (k - l).signum();
    t.eps_p = Some(ep);
    t.eps_q = Some(eq);
    t.sgn_k_l = Some(skl);
    if k == l {
        return t;
    }
    if p == q {
        t.b = -skl * ep;
        return t;
    }
    let skp = (kp - lp).signum();
    let a = c.get(w.letter(k), w.letter(l));
    t.sgn_kplus_lplus = Some(skp);
    t.cartan = Some(a);
    if skl * skp * ep * eq > 0 {
        t.b = -skl * ep * a;
    }
    t
}

/// The full computation table, column by column.
pub fn exchange_trace(w: &ShuffledWord, s: &SuccessorMap, c: &CartanMatrix) -> Vec<EntryTrace> {
    let rows = w.indices();
    s.exchangeable()
        .iter()
        .flat_map(|&l| rows.iter().map(move |&k| (k, l)))
        .map(|(k, l)| entry_trace(w, s, c, k, l))
        .collect()
}

pub fn exchange_matrix(w: &ShuffledWord, s: &SuccessorMap, c: &CartanMatrix) -> ExchangeMatrix {
    let rows = w.indices();
    let columns: Vec<Index> = s.exchangeable().iter().copied().collect();
    let entries = rows
        .iter()
        .map(|&k| {
            columns
                .iter()
                .map(|&l| entry_trace(w, s, c, k, l).b)
                .collect()
        })
        .collect();
    ExchangeMatrix {
        rows,
        columns,
        entries,
    }
}

/// Renders the trace as a fixed-width table; empty fields print blank.
pub fn format_trace(trace: &[EntryTrace]) -> String {
    fn sign(x: Option<i32>) -> String {
        match x {
            Some(1) => "+".into(),
            Some(-1) => "-".into(),
            Some(0) => "0".into(),
            Some(v) => v.to_string(),
            None => String::new(),
        }
    }
    fn num(x: Option<i32>) -> String {
        x.map(|v| v.to_string()).unwrap_or_default()
    }
    let header = [
        "k",
        "l",
        "p",
        "q",
        "eps_p",
        "eps_q",
        "sgn(k-l)",
        "sgn(k+-l+)",
        "a",
        "b",
    ];
    let mut lines = vec![header
        .iter()
        .map(|h| format!("{h:>12}"))
        .collect::<String>()];
    for t in trace {
        let cells = [
            t.k.to_string(),
            t.l.to_string(),
            t.p.to_string(),
            t.q.to_string(),
            sign(t.eps_p),
            sign(t.eps_q),
            sign(t.sgn_k_l),
            sign(t.sgn_kplus_lplus),
            num(t.cartan),
            t.b.to_string(),
        ];
        lines.push(cells.iter().map(|c| format!("{c:>12}")).collect());
    }
    lines
        .iter()
        .map(|l| l.trim_end())
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}
