//! Worked examples with known answers, used by `verify-example`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ktheory::{
    k_promotion_count, k_tableaux, parity_chains, parity_check, pieri_check, pieri_order,
};
use crate::monodromy::{ordering_orbits, CircularOrdering, OrderingPreset};
use crate::shapes::{parse_partition_list, Partition, Rectangle};
use crate::tableau::IncreasingTableau;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl Check {
    fn new(name: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.to_string(),
            ok: expected == actual,
            expected,
            actual,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub id: String,
    pub description: String,
    pub checks: Vec<Check>,
    pub ok: bool,
}

pub struct Example {
    pub id: &'static str,
    pub description: &'static str,
    run: fn() -> Result<Vec<Check>>,
}

impl Example {
    pub fn run(&self) -> Result<ExampleReport> {
        let checks = (self.run)()?;
        Ok(ExampleReport {
            id: self.id.to_string(),
            description: self.description.to_string(),
            ok: checks.iter().all(|c| c.ok),
            checks,
        })
    }
}

pub const EXAMPLES: &[Example] = &[
    Example {
        id: "g38",
        description:
            "G(3,8), types (2);(2,1);(3,1);(3,2): component counts for three circular orderings",
        run: g38,
    },
    Example {
        id: "g37",
        description: "G(3,7), types (2);(2);(2,1);(3,1): orbit sizes for two circular orderings",
        run: g37,
    },
    Example {
        id: "g48",
        description: "G(4,8), alpha = beta = gamma = (3,1,1): two components, trivial monodromy",
        run: g48,
    },
    Example {
        id: "g49",
        description: "G(4,9), alpha = gamma = (3,2,1), beta = (4,2,1): one component, chi = -1",
        run: g49,
    },
    Example {
        id: "pieri-3x6",
        description: "Pieri case in 3x6 with alpha = (4,2), beta = (4), gamma = (5,2)",
        run: pieri_3x6,
    },
    Example {
        id: "promo-2x2",
        description: "Promotion on the 2x2 square: one increasing filling, odd promotion",
        run: promotion_2x2,
    },
];

pub fn find(id: &str) -> Result<&'static Example> {
    EXAMPLES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Parse(format!("unknown example '{id}'")))
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn rect(k: usize, m: usize) -> Rectangle {
    Rectangle::new(k, m).unwrap()
}

fn ordering_check(
    types: &[Partition],
    r: Rectangle,
    ordering: &str,
) -> Result<(usize, Vec<usize>)> {
    let ord: CircularOrdering = ordering.parse()?;
    let rep = ordering_orbits(types, r, &ord, &OrderingPreset::BoxSecond)?;
    Ok((rep.set_size, rep.orbit_sizes()))
}

fn g38() -> Result<Vec<Check>> {
    let types = parse_partition_list("2;2,1;3,1;3,2")?;
    let mut checks = Vec::new();
    for (ord, eta) in [("1234", 3), ("1243", 1), ("1324", 1)] {
        let (_, sizes) = ordering_check(&types, rect(3, 5), ord)?;
        checks.push(Check::new(
            &format!("eta for ordering {ord}"),
            eta,
            sizes.len(),
        ));
    }
    Ok(checks)
}

fn g37() -> Result<Vec<Check>> {
    let types = parse_partition_list("2;2;2,1;3,1")?;
    let mut checks = Vec::new();
    for (ord, expected) in [("1234", "[3, 5]"), ("1324", "[4, 4]")] {
        let (size, mut sizes) = ordering_check(&types, rect(3, 4), ord)?;
        sizes.sort_unstable();
        checks.push(Check::new(
            &format!("fiber size for ordering {ord}"),
            8,
            size,
        ));
        checks.push(Check::new(
            &format!("orbit sizes for ordering {ord}"),
            expected,
            format!("{sizes:?}"),
        ));
    }
    Ok(checks)
}

fn g48() -> Result<Vec<Check>> {
    let a = p("3,1,1");
    let rep = parity_check(&a, &a, &a, rect(4, 4))?;
    Ok(vec![
        Check::new("k", 0, rep.k),
        Check::new("c", 2, rep.c),
        Check::new("monodromy is the identity", true, rep.orbits.is_identity()),
        Check::new("eta", 2, rep.eta),
    ])
}

fn g49() -> Result<Vec<Check>> {
    let a = p("3,2,1");
    let rep = parity_check(&a, &p("4,2,1"), &a, rect(4, 5))?;
    Ok(vec![
        Check::new("c", 12, rep.c),
        Check::new("k", 13, rep.k),
        Check::new("eta", 1, rep.eta),
        Check::new("chi", -1, rep.chi),
        Check::new(
            "eta = c - k mod 2",
            true,
            (rep.eta as i64 - rep.chi).rem_euclid(2) == 0,
        ),
    ])
}

/// Expected chains for the 3x6 Pieri example as row reading of the
/// concatenated standard tableau, listed in row order of the box.
const PIERI_3X6_CHAINS: [&str; 3] = [
    "1 2 3 4 10 11 / 5 6 8 9 15 16 / 7 12 13 14 17 18",
    "1 2 3 4 10 11 / 5 6 7 9 15 16 / 8 12 13 14 17 18",
    "1 2 3 4 7 11 / 5 6 9 10 15 16 / 8 12 13 14 17 18",
];

fn pieri_3x6() -> Result<Vec<Check>> {
    let (alpha, beta, gamma, r) = (p("4,2"), p("4"), p("5,2"), rect(3, 6));
    let chains = pieri_order(&parity_chains(&alpha, &beta, &gamma, r));
    let actual: Vec<String> = chains.iter().map(|c| c.tableau().to_string()).collect();
    let mut kt: Vec<Vec<Vec<usize>>> = k_tableaux(&alpha, &beta, &gamma, r)?
        .iter()
        .map(|t: &IncreasingTableau| t.rows().to_vec())
        .collect();
    kt.sort();
    let report = pieri_check(&alpha, 4, &gamma, r)?;
    Ok(vec![
        Check::new("chains", PIERI_3X6_CHAINS.join(" | "), actual.join(" | ")),
        Check::new(
            "K tableaux",
            "[[[3, 4], [1, 2], [1]], [[3, 4], [2, 3], [1]]]",
            format!("{kt:?}"),
        ),
        Check::new("loop acts as i -> i+1", true, report.cyclic),
        Check::new("k = rows - 1", 2, report.k),
    ])
}

fn promotion_2x2() -> Result<Vec<Check>> {
    let r = rect(2, 2);
    Ok(vec![
        Check::new("increasing fillings", 1, k_promotion_count(r)),
        Check::new("promotion sign", 1, crate::ktheory::promotion_sign(r)),
    ])
}
