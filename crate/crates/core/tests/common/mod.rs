//! Shared fixtures, transcribed tables and naive oracles for the
//! integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use itertools::Itertools;
use wajsberg::format::{parse_algebra, parse_code};
use wajsberg::{Algebra, BlockCode, FiniteAlgebra, WajsbergAlgebra};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn algebra(name: &str) -> Algebra {
    parse_algebra(&fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn wajsberg(name: &str) -> WajsbergAlgebra {
    match algebra(name) {
        Algebra::Wajsberg(w) => w,
        other => panic!("{name} is a {} algebra", other.kind()),
    }
}

pub fn code(name: &str) -> BlockCode {
    parse_code(&fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Reads a grid of element names, one row per line.
pub fn letters(grid: &str, names: &[&str]) -> Vec<Vec<usize>> {
    grid.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|c| names.iter().position(|n| *n == c).unwrap_or_else(|| panic!("unknown {c}")))
                .collect()
        })
        .collect()
}

pub fn names(row: &str, labels: &[&str]) -> Vec<usize> {
    letters(row, labels).remove(0)
}

pub const EX_LABELS: [&str; 6] = ["t", "a", "b", "c", "d", "e"];
pub const L6: [&str; 6] = ["O", "A", "B", "C", "D", "E"];
pub const L8: [&str; 8] = ["O", "X", "Y", "Z", "T", "U", "V", "E"];

// Six-element example, `t` standing for the bottom element.
pub const EX_STAR: &str = "
t t t t t t
a t a t t t
b b t b t t
c a c t a t
d b a b t t
e d c b a t";

pub const EX_OPLUS: &str = "
t a b c d e
a c d c e e
b d b e d e
c c e c e e
d e d e e e
e e e e e e";

pub const EX_COMPLEMENT: &str = "e d c b a t";

pub const EX_CIRC: &str = "
e e e e e e
d e d e e e
c c e c e e
b d b e d e
a c d c e e
t a b c d e";

pub const T4_4: &str = "
E E E E E E
D E E D E E
C D E C D E
B B B E E E
A B B D E E
O A B C D E";

pub const T4_5: &str = "
E E E E E E
D E D E E E
C C E C E E
B D B E D E
A C D C E E
O A B C D E";

pub const T4_6: &str = "
E E E E E E
B E D A D E
A E E A E E
D E D E D E
C A A C E E
O A B C D E";

pub const T4_7: &str = "
E E E E E E
D E D E D E
C C E E E E
B C D E D E
A A C C E E
O A B C D E";

/// As commonly printed; cell (U, T) reads T.
pub const T4_8A_PRINTED: &str = "
E E E E E E E E
V E V E V E V E
U U E E E E E E
T U V E V E V E
Z Z U U E E E E
Y Z T U T E V E
X X Z Z U U E E
O X Y Z T U V E";

/// As commonly printed; cell (T, X) reads X.
pub const T4_8B_PRINTED: &str = "
E E E E E E E E
V E E E V E E E
U V E E U V E E
T U V E T U V E
Z X Z Z E E E E
Y Z Z Z V E E E
X Y Z Z U V E E
O X Y Z T U V E";

pub const T4_9: &str = "
E E E E E E E E
V E V E V E V E
U U E E U U E E
T U V E T U V E
Z Z Z Z E E E E
Y Z Y Z V E V E
X X Z Z U U E E
O X Y Z T U V E";

pub const T4_11: &str = "
E E E E
B E B E
A A E E
O A B E";

/// Printed table with one cell replaced.
pub fn corrected(grid: &str, labels: &[&str], row: &str, col: &str, value: &str) -> Vec<Vec<usize>> {
    let mut t = letters(grid, labels);
    let at = |n: &str| labels.iter().position(|l| *l == n).unwrap();
    t[at(row)][at(col)] = at(value);
    t
}

pub fn t4_8a() -> Vec<Vec<usize>> {
    corrected(T4_8A_PRINTED, &L8, "U", "T", "V")
}

pub fn t4_8b() -> Vec<Vec<usize>> {
    corrected(T4_8B_PRINTED, &L8, "T", "X", "Z")
}

/// Permutation from a list of `from->to` element-name pairs; unlisted
/// elements stay fixed.
pub fn relabeling(pairs: &[(&str, &str)], labels: &[&str]) -> Vec<usize> {
    let mut f: Vec<usize> = (0..labels.len()).collect();
    let at = |n: &str| labels.iter().position(|l| *l == n).unwrap();
    for (from, to) in pairs {
        f[at(from)] = at(to);
    }
    f
}

/// Naive check of the four implication laws plus `~~x = x`, written
/// straight from the definitions.
pub fn oracle_is_wajsberg(t: &[Vec<usize>], neg: &[usize], one: usize) -> bool {
    let k = t.len();
    let r = 0..k;
    (0..k).all(|x| t[one][x] == x)
        && (0..k).all(|x| neg[neg[x]] == x)
        && r.clone().cartesian_product(0..k).cartesian_product(0..k).all(|((x, y), z)| {
            t[t[x][y]][t[t[y][z]][t[x][z]]] == one
        })
        && r.clone().cartesian_product(0..k).all(|(x, y)| t[t[x][y]][y] == t[t[y][x]][x])
        && r.cartesian_product(0..k).all(|(x, y)| t[t[neg[x]][neg[y]]][t[y][x]] == one)
}

/// `x <= y` from the table alone: `x -> y = 1`.
pub fn oracle_leq(w: &WajsbergAlgebra, x: usize, y: usize) -> bool {
    w.table().row(x)[y] == w.one()
}

/// Unordered factorizations by brute force: every multiset of divisors in
/// `[2, n-1]` with at most `log2 n` members whose product is `n`.
pub fn oracle_factorizations(n: usize) -> Vec<Vec<usize>> {
    if n < 4 {
        return Vec::new();
    }
    let divisors: Vec<usize> = (2..n).filter(|&d| n.is_multiple_of(d)).collect();
    let max_len = usize::BITS as usize - n.leading_zeros() as usize;
    let mut out: Vec<Vec<usize>> = (2..=max_len)
        .flat_map(|len| {
            divisors
                .iter()
                .copied()
                .combinations_with_replacement(len)
                .filter(|c| c.iter().product::<usize>() == n)
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out
}

pub fn words(code: &BlockCode) -> Vec<String> {
    code.words().iter().map(ToString::to_string).collect()
}

pub fn render(grid: &[Vec<usize>], labels: &[&str]) -> String {
    grid.iter()
        .map(|r| r.iter().map(|&i| labels[i]).join(" "))
        .join("\n")
}
