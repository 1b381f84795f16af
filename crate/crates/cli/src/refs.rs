//! Classical reference anchors for the supported moduli, used by
//! `--check-refs` to pit computed output against the published record
//! values side by side.

use cheb_bias_core::ChampionRecord;

/// (modulus, epsilon, record level n, first prime attaining it)
pub const CHAMPION_REFS: &[(u64, i8, u64, u64)] = &[
    (4, 1, 1, 3),
    (4, 1, 105, 359_327),
    (4, -1, 1, 26_861),
    (11, 1, 158, 638_567),
    (11, -1, 32, 1_867_321),
    (13, 1, 123, 263_881),
    (13, -1, 40, 905_761),
    (163, 1, 74, 68_491),
    (163, -1, 86, 174_637),
];

/// (modulus, first prime with a negative bias)
pub const FIRST_NEGATIVE_REFS: &[(u64, u64)] = &[(4, 26_861), (13, 2_083), (163, 15_073)];

/// Compare computed champions against the reference anchors that fall inside
/// the scanned range. Prints one line per anchor to stderr; returns false on
/// any mismatch.
pub fn check_champions(q: u64, limit: u64, records: &[ChampionRecord]) -> bool {
    let mut ok = true;
    for &(rq, eps, n, x) in CHAMPION_REFS {
        if rq != q || x > limit {
            continue;
        }
        let found = records
            .iter()
            .find(|r| r.epsilon == eps && r.n == n)
            .map(|r| r.x);
        let verdict = match found {
            Some(got) if got == x => "ok",
            Some(_) => "MISMATCH",
            None => "MISSING",
        };
        eprintln!(
            "ref q={q} eps={eps:+} n={n}: reference x={x} computed x={} {verdict}",
            found.map_or_else(|| "-".to_string(), |g| g.to_string())
        );
        ok &= verdict == "ok";
    }
    ok
}

/// Compare the first negative zone start against its reference value, when
/// one is known for the modulus and in range.
pub fn check_first_negative_zone(q: u64, limit: u64, first_neg_start: Option<u64>) -> bool {
    for &(rq, x) in FIRST_NEGATIVE_REFS {
        if rq != q || x > limit {
            continue;
        }
        let verdict = if first_neg_start == Some(x) {
            "ok"
        } else {
            "MISMATCH"
        };
        eprintln!(
            "ref q={q}: first negative zone reference start={x} computed start={} {verdict}",
            first_neg_start.map_or_else(|| "-".to_string(), |g| g.to_string())
        );
        return verdict == "ok";
    }
    true
}
