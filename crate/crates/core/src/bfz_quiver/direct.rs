use crate::cartan_graph::CartanMatrix;
use crate::coxeter_words::{Index, ShuffledWord, SuccessorMap};

use super::quiver::Quiver;

/// Edge rule for a pair `k < l`, ignoring exchangeability. Returns the
/// arrow as `(source, target)` if the pair is joined.
///
/// Horizontal (`l = k⁺`): `k -> l` iff `ε(i_l) = +1`.
/// Inclined (adjacent letters, `l < k⁺ < l⁺` with `ε(i_l) = ε(i_{k⁺})`, or
/// `l < l⁺ < k⁺` with `ε(i_l) = -ε(i_{l⁺})`): `k -> l` iff `ε(i_l) = -1`.
pub fn edge_rule(
    w: &ShuffledWord,
    s: &SuccessorMap,
    c: &CartanMatrix,
    k: Index,
    l: Index,
) -> Option<(Index, Index)> {
    debug_assert!(k < l);
    let (kp, lp) = (s.plus(k), s.plus(l));
    let eps_l = w.sign(l).value();
    if l == kp {
        return Some(if eps_l == 1 { (k, l) } else { (l, k) });
    }
    let (a, b) = (w.letter(k), w.letter(l));
    if a == b || c.get(a, b) >= 0 {
        return None;
    }
    let n = w.len() as Index;
    let first = l < kp && kp < lp && kp <= n && eps_l == w.sign(kp).value();
    let second = l < lp && lp < kp && lp <= n && eps_l == -w.sign(lp).value();
    if first || second {
        Some(if eps_l == -1 { (k, l) } else { (l, k) })
    } else {
        None
    }
}

/// The quiver built from the edge rules, over pairs with an exchangeable member.
pub fn quiver_direct(w: &ShuffledWord, s: &SuccessorMap, c: &CartanMatrix) -> Quiver {
    let mut q = Quiver::on_word(w, s);
    let idx = w.indices();
    for (i, &k) in idx.iter().enumerate() {
        for &l in &idx[i + 1..] {
            if !s.is_exchangeable(k) && !s.is_exchangeable(l) {
                continue;
            }
            if let Some((x, y)) = edge_rule(w, s, c, k, l) {
                q.add_arrow(x, y);
            }
        }
    }
    q
}
