use super::store::Memo;
use super::{le, make_game, Game};

static CANONICAL: Memo<Game, Game> = Memo::new();

/// The simplest form of `G`: dominated options deleted and reversible options
/// bypassed until neither applies. Equal games share one canonical node.
pub fn canonical(g: Game) -> Game {
    if let Some(c) = CANONICAL.get(&g) {
        return c;
    }
    let mut left: Vec<Game> = g.left().iter().map(|&x| canonical(x)).collect();
    let mut right: Vec<Game> = g.right().iter().map(|&x| canonical(x)).collect();
    normalize(&mut left);
    normalize(&mut right);
    loop {
        // Comparisons against `g` stay valid: every rewrite preserves its value.
        let (new_left, bypassed_l) = bypass_left(&left, g);
        let (new_right, bypassed_r) = bypass_right(&right, g);
        left = new_left;
        right = new_right;
        let pruned_l = prune(&mut left, le);
        let pruned_r = prune(&mut right, |a, b| le(b, a));
        if !(bypassed_l || bypassed_r || pruned_l || pruned_r) {
            break;
        }
    }
    let c = make_game(left, right);
    CANONICAL.insert(g, c);
    CANONICAL.insert(c, c);
    c
}

fn normalize(v: &mut Vec<Game>) {
    v.sort_unstable();
    v.dedup();
}

/// A left option `G^L` reverses through `G^LR <= G`; replace it by the left options of `G^LR`.
fn bypass_left(options: &[Game], g: Game) -> (Vec<Game>, bool) {
    let mut out = Vec::with_capacity(options.len());
    let mut changed = false;
    for &gl in options {
        match gl.right().iter().find(|&&glr| le(glr, g)) {
            Some(&glr) => {
                out.extend(glr.left().iter().copied());
                changed = true;
            }
            None => out.push(gl),
        }
    }
    normalize(&mut out);
    (out, changed)
}

/// A right option `G^R` reverses through `G^RL >= G`; replace it by the right options of `G^RL`.
fn bypass_right(options: &[Game], g: Game) -> (Vec<Game>, bool) {
    let mut out = Vec::with_capacity(options.len());
    let mut changed = false;
    for &gr in options {
        match gr.left().iter().find(|&&grl| le(g, grl)) {
            Some(&grl) => {
                out.extend(grl.right().iter().copied());
                changed = true;
            }
            None => out.push(gr),
        }
    }
    normalize(&mut out);
    (out, changed)
}

/// Removes every option `a` for which some other option `b` has `worse(a, b)`.
/// Options are canonical and distinct, so `worse` is strict between them.
fn prune(options: &mut Vec<Game>, worse: impl Fn(Game, Game) -> bool) -> bool {
    let before = options.len();
    let snapshot = options.clone();
    options.retain(|&a| !snapshot.iter().any(|&b| b != a && worse(a, b)));
    options.len() != before
}
