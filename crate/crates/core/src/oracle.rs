//! Independent brute-force ground truth: enumerate every weak order,
//! linear order, and (at desk scale) every choice correspondence, decide
//! representability by exhaustive search, and sweep the census checking
//! that the condition checks, the constructive recovery, and the search
//! all agree table by table.

use std::ops::Range;

use crate::axioms::conditions_hold;
use crate::engine::{generate, generate_rational};
use crate::model::{all_menus, Alt, ChoiceCorrespondence, LinearOrder, Menu, WeakOrder};
use crate::recovery::recover;

/// All ordered set partitions of `{0, …, n-1}`, each exactly once. The
/// first class ranges over nonempty subsets in ascending bitmask order,
/// recursively.
pub fn enumerate_weak_orders(n: u8) -> Vec<WeakOrder> {
    fn rec(n: u8, remaining: u16, prefix: &mut Vec<Menu>, out: &mut Vec<WeakOrder>) {
        if remaining == 0 {
            out.push(WeakOrder::new(n, prefix.clone()).expect("classes partition by construction"));
            return;
        }
        // carry-rippler: nonempty subsets of `remaining` in ascending order
        let mut s: u16 = 0;
        loop {
            s = s.wrapping_sub(remaining) & remaining;
            if s == 0 {
                break;
            }
            prefix.push(Menu::new(s));
            rec(n, remaining & !s, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    rec(n, Menu::full(n).bits(), &mut Vec::new(), &mut out);
    out
}

/// All `n!` rankings in lexicographic order.
pub fn enumerate_linear_orders(n: u8) -> Vec<LinearOrder> {
    fn rec(n: u8, used: u16, prefix: &mut Vec<Alt>, out: &mut Vec<LinearOrder>) {
        if prefix.len() == n as usize {
            out.push(LinearOrder::new(prefix.clone()).expect("prefix is a permutation"));
            return;
        }
        for a in 0..n {
            if used & (1 << a) == 0 {
                prefix.push(a);
                rec(n, used | 1 << a, prefix, out);
                prefix.pop();
            }
        }
    }

    let mut out = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of total choice correspondences on a universe of size `n`: the
/// product of `2^|A| − 1` over every menu `A`. Overflows u128 past n = 5.
pub fn census_size(n: u8) -> u128 {
    all_menus(n).fold(1u128, |acc, m| {
        acc.checked_mul((1u128 << m.len()) - 1)
            .expect("census size overflows u128")
    })
}

// Mixed-radix layout of the census: one digit per menu in canonical order,
// first menu least significant, digit = index into that menu's canonical
// list of nonempty subsets.
struct Decoder {
    n: u8,
    menus: Vec<Menu>,
    options: Vec<Vec<u16>>,
}

impl Decoder {
    fn new(n: u8) -> Decoder {
        let menus: Vec<Menu> = all_menus(n).collect();
        let options = menus
            .iter()
            .map(|&m| crate::model::subsets(m).map(Menu::bits).collect())
            .collect();
        Decoder { n, menus, options }
    }

    fn digits_of(&self, mut offset: u64) -> Vec<usize> {
        let mut digits = Vec::with_capacity(self.menus.len());
        for opts in &self.options {
            let radix = opts.len() as u64;
            digits.push((offset % radix) as usize);
            offset /= radix;
        }
        assert_eq!(offset, 0, "offset beyond the census");
        digits
    }

    fn decode(&self, digits: &[usize]) -> ChoiceCorrespondence {
        let mut table = vec![0u16; 1 << self.n];
        for (i, &m) in self.menus.iter().enumerate() {
            table[m.bits() as usize] = self.options[i][digits[i]];
        }
        ChoiceCorrespondence::from_table(self.n, table).expect("options are valid choices")
    }

    fn table_at(&self, offset: u64) -> ChoiceCorrespondence {
        self.decode(&self.digits_of(offset))
    }
}

/// Streams the whole census in offset order without materialising it.
/// Desk scale only: the census explodes past n = 4.
pub struct CorrespondenceStream {
    dec: Decoder,
    digits: Vec<usize>,
    remaining: u64,
}

pub fn enumerate_correspondences(n: u8) -> CorrespondenceStream {
    CorrespondenceStream::from_offset(n, 0)
}

impl CorrespondenceStream {
    /// Starts mid-census; used to shard sweeps by offset range.
    pub fn from_offset(n: u8, offset: u64) -> CorrespondenceStream {
        assert!(n <= 4, "the correspondence census is only streamable for n ≤ 4");
        let total = census_size(n) as u64;
        assert!(offset <= total);
        let dec = Decoder::new(n);
        let digits = if offset < total {
            dec.digits_of(offset)
        } else {
            vec![0; dec.menus.len()]
        };
        CorrespondenceStream {
            dec,
            digits,
            remaining: total - offset,
        }
    }
}

impl Iterator for CorrespondenceStream {
    type Item = ChoiceCorrespondence;

    fn next(&mut self) -> Option<ChoiceCorrespondence> {
        if self.remaining == 0 {
            return None;
        }
        let out = self.dec.decode(&self.digits);
        self.remaining -= 1;
        for (d, opts) in self.digits.iter_mut().zip(&self.dec.options) {
            *d += 1;
            if *d < opts.len() {
                break;
            }
            *d = 0;
        }
        Some(out)
    }
}

/// Every (weak order, linear order) pair whose generated table equals `c`.
/// Empty means `c` has no minimal-compromise representation.
pub fn brute_force_representations(
    c: &ChoiceCorrespondence,
) -> Vec<(WeakOrder, LinearOrder)> {
    let mut out = Vec::new();
    for w in enumerate_weak_orders(c.n()) {
        for l in enumerate_linear_orders(c.n()) {
            if generate(&w, &l) == *c {
                out.push((w.clone(), l));
            }
        }
    }
    out
}

/// Every weak order whose plain maximisation equals `c`.
pub fn brute_force_rationalize(c: &ChoiceCorrespondence) -> Vec<WeakOrder> {
    enumerate_weak_orders(c.n())
        .into_iter()
        .filter(|w| generate_rational(w) == *c)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

/// A table where the three verdicts — conditions, exhaustive search, and
/// constructive recovery — fail to agree. Must never occur.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub table: Vec<u16>,
    pub conditions_pass: bool,
    pub representable: bool,
    pub recovered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub n: u8,
    pub mode: SweepMode,
    pub scanned: u64,
    pub conditions_pass: u64,
    pub representable: u64,
    pub recovered: u64,
    pub discrepancy_count: u64,
    /// At most `DISCREPANCY_SAMPLE_LIMIT` concrete cases are retained.
    pub discrepancies: Vec<Discrepancy>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancy_count == 0
    }
}

pub const DISCREPANCY_SAMPLE_LIMIT: usize = 100;

#[derive(Default)]
struct Partial {
    scanned: u64,
    conditions_pass: u64,
    representable: u64,
    recovered: u64,
    discrepancy_count: u64,
    discrepancies: Vec<Discrepancy>,
}

fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

// Counter-based so sample j is a function of (seed, j) alone; the sampled
// set is then independent of how the index range is sharded.
fn sample_offset(seed: u64, index: u64, census: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index.wrapping_add(1))) % census
}

fn evaluate(c: &ChoiceCorrespondence, representable: &[Vec<u16>], p: &mut Partial) {
    let conds = conditions_hold(c);
    let recovered = recover(c).is_ok();
    let in_search = representable
        .binary_search_by(|t| t.as_slice().cmp(c.table_bits()))
        .is_ok();

    p.scanned += 1;
    p.conditions_pass += conds as u64;
    p.representable += in_search as u64;
    p.recovered += recovered as u64;
    if conds != recovered || conds != in_search {
        p.discrepancy_count += 1;
        if p.discrepancies.len() < DISCREPANCY_SAMPLE_LIMIT {
            p.discrepancies.push(Discrepancy {
                table: c.table_bits().to_vec(),
                conditions_pass: conds,
                representable: in_search,
                recovered,
            });
        }
    }
}

fn sweep_range(
    n: u8,
    mode: SweepMode,
    range: Range<u64>,
    census: u64,
    representable: &[Vec<u16>],
) -> Partial {
    let mut p = Partial::default();
    match mode {
        SweepMode::Exhaustive => {
            let len = (range.end - range.start) as usize;
            for c in CorrespondenceStream::from_offset(n, range.start).take(len) {
                evaluate(&c, representable, &mut p);
            }
        }
        SweepMode::Sample { seed, .. } => {
            let dec = Decoder::new(n);
            for j in range {
                let c = dec.table_at(sample_offset(seed, j, census));
                evaluate(&c, representable, &mut p);
            }
        }
    }
    p
}

/// Scans census tables (all of them, or a seeded uniform sample) and
/// asserts, for each one, that the five conditions, exhaustive search over
/// every preference pair, and constructive recovery agree on whether the
/// table is representable. The report merges shard results in shard order
/// and is identical for any shard count.
pub fn characterization_sweep(n: u8, mode: SweepMode, shards: usize) -> SweepReport {
    assert!(n <= 4, "sweeps are desk-scale (n ≤ 4)");
    assert!(shards >= 1);
    let census = census_size(n) as u64;

    // ground truth: the set of generable tables, from all pairs
    let mut representable: Vec<Vec<u16>> = Vec::new();
    for w in enumerate_weak_orders(n) {
        for l in enumerate_linear_orders(n) {
            representable.push(generate(&w, &l).table_bits().to_vec());
        }
    }
    representable.sort();
    representable.dedup();

    let total = match mode {
        SweepMode::Exhaustive => census,
        SweepMode::Sample { count, .. } => count,
    };

    let shards = shards as u64;
    let partials: Vec<Partial> = std::thread::scope(|scope| {
        let representable = &representable;
        (0..shards)
            .map(|i| {
                let lo = total / shards * i + (total % shards).min(i);
                let hi = total / shards * (i + 1) + (total % shards).min(i + 1);
                scope.spawn(move || sweep_range(n, mode, lo..hi, census, representable))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .map(|h| h.join().expect("sweep shard panicked"))
            .collect()
    });

    let mut report = SweepReport {
        n,
        mode,
        scanned: 0,
        conditions_pass: 0,
        representable: 0,
        recovered: 0,
        discrepancy_count: 0,
        discrepancies: Vec::new(),
    };
    for p in partials {
        report.scanned += p.scanned;
        report.conditions_pass += p.conditions_pass;
        report.representable += p.representable;
        report.recovered += p.recovered;
        report.discrepancy_count += p.discrepancy_count;
        for d in p.discrepancies {
            if report.discrepancies.len() < DISCREPANCY_SAMPLE_LIMIT {
                report.discrepancies.push(d);
            }
        }
    }
    report
}
