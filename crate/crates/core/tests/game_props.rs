mod common;

use common::*;
use dutchbook_core::field::Dyadic;
use dutchbook_core::game::*;
use proptest::prelude::*;

fn tiny(m: u32) -> Game {
    number_to_game(&Dyadic::pow2_inverse(m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn order_laws(g in game(), h in game(), k in game()) {
        prop_assert!(le(g, g));
        if le(g, h) && le(h, k) {
            prop_assert!(le(g, k));
        }
        if le(g, h) {
            prop_assert!(le(add(g, k), add(h, k)));
        }
        prop_assert!(eq(sub(g, g), zero()));
        prop_assert_eq!(le(g, h), le(neg(h), neg(g)));
        let rel = Relation::between(g, h);
        prop_assert_eq!(rel == Relation::Confused, confused(g, h));
    }

    #[test]
    fn status_matches_play_out(g in game()) {
        prop_assert_eq!(status(g), status_bruteforce(g).unwrap());
    }

    #[test]
    fn equal_games_share_status(g in game(), h in game()) {
        if eq(g, h) {
            prop_assert_eq!(status(g), status(h));
            prop_assert_eq!(canonical(g), canonical(h));
        }
        // G + H - H has the status of G
        prop_assert_eq!(status(sub(add(g, h), h)), status(g));
    }

    #[test]
    fn canonical_form(g in game()) {
        let c = canonical(g);
        prop_assert!(eq(c, g));
        prop_assert_eq!(canonical(c), c);
        prop_assert!(c.position_count() <= g.position_count());
        prop_assert_eq!(parse_game(&format_game(g)).map(canonical).unwrap(), c);
    }

    #[test]
    fn dyadic_homomorphism(x in dyadic(), y in dyadic()) {
        let (gx, gy) = (number_to_game(&x), number_to_game(&y));
        prop_assert_eq!(game_to_number(add(gx, gy)).unwrap(), &x + &y);
        prop_assert_eq!(game_to_number(neg(gx)).unwrap(), -&x);
        prop_assert_eq!(le(gx, gy), x <= y);
        prop_assert_eq!(game_to_number(gx).unwrap(), x);
    }

    #[test]
    fn infinitesimal_means_squeezed(g in game()) {
        let squeezed = (0..8).all(|m| le(neg(tiny(m)), g) && le(g, tiny(m)));
        // stops are dyadic with exponent well below 8 for depth-3 games
        prop_assert_eq!(is_infinitesimal(g), squeezed);
    }
}

#[test]
fn hand_checked_values() {
    assert_eq!(status(zero()), Status::Zero);
    assert_eq!(status(star()), Status::Fuzzy);
    assert!(gt(up(), zero()));
    assert!(confused(add(up(), star()), zero()));
    assert!(eq(nmul(2, parse_game("{0|1}").unwrap()), one()));
    assert!(is_infinitesimal(add(one(), sub(up(), one()))));
    assert!(!is_infinitesimal(parse_game("{1|-1}").unwrap()));
    assert_eq!(stops(parse_game("{10|2}").unwrap()), (Dyadic::integer(10), Dyadic::integer(2)));
}
