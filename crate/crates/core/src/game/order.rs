use super::store::Memo;
use super::{number_form, zero, Game, Status};

static LE: Memo<(Game, Game), bool> = Memo::new();

/// `G <= H`: no left option of `G` is `>= H` and no right option of `H` is `<= G`.
pub fn le(g: Game, h: Game) -> bool {
    if g == h {
        return true;
    }
    if let (Some(x), Some(y)) = (number_form(g), number_form(h)) {
        return x <= y;
    }
    if let Some(r) = LE.get(&(g, h)) {
        return r;
    }
    let r = !g.left().iter().any(|&gl| le(h, gl)) && !h.right().iter().any(|&hr| le(hr, g));
    LE.insert((g, h), r);
    r
}

pub fn ge(g: Game, h: Game) -> bool {
    le(h, g)
}

/// Value equality.
pub fn eq(g: Game, h: Game) -> bool {
    le(g, h) && le(h, g)
}

pub fn lt(g: Game, h: Game) -> bool {
    le(g, h) && !le(h, g)
}

pub fn gt(g: Game, h: Game) -> bool {
    lt(h, g)
}

/// `G || H`: neither `G <= H` nor `H <= G`.
pub fn confused(g: Game, h: Game) -> bool {
    !le(g, h) && !le(h, g)
}

/// How two games compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Relation {
    Less,
    Equal,
    Greater,
    Confused,
}

impl Relation {
    pub fn between(g: Game, h: Game) -> Relation {
        match (le(g, h), le(h, g)) {
            (true, true) => Relation::Equal,
            (true, false) => Relation::Less,
            (false, true) => Relation::Greater,
            (false, false) => Relation::Confused,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
            Relation::Confused => "‖",
        }
    }
}

/// Outcome class of `G`, read off the comparison with `0`.
pub fn status(g: Game) -> Status {
    match Relation::between(g, zero()) {
        Relation::Equal => Status::Zero,
        Relation::Greater => Status::Positive,
        Relation::Less => Status::Negative,
        Relation::Confused => Status::Fuzzy,
    }
}
