//! Named law suites over runtime-selected semirings and monoids.

use std::fmt;
use std::str::FromStr;

use super::laws::*;
use super::roundtrip::*;
use super::sampling::Sampler;
use super::witness::canonical;
use crate::algebra::{Boolean, GaussianRational, Multiplicative, Nat, NonNegRational, SemiringTag, Tropical, Word};
use crate::error::{Error, Result};
use crate::monadcore::{ActionMonad, Multiset, MultisetMonad};
use crate::report::LawReport;

/// A named family of law checks.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Suite {
    MonadLaws,
    Additivity,
    Commutativity,
    MatcatLaws,
    Dagger,
    Freetheory,
    KleisliIso,
    AdjunctionRoundtrips,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::MonadLaws,
        Suite::Additivity,
        Suite::Commutativity,
        Suite::MatcatLaws,
        Suite::Dagger,
        Suite::Freetheory,
        Suite::KleisliIso,
        Suite::AdjunctionRoundtrips,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MonadLaws => "monad-laws",
            Suite::Additivity => "additivity",
            Suite::Commutativity => "commutativity",
            Suite::MatcatLaws => "matcat-laws",
            Suite::Dagger => "dagger",
            Suite::Freetheory => "freetheory",
            Suite::KleisliIso => "kleisli-iso",
            Suite::AdjunctionRoundtrips => "adjunction-roundtrips",
        }
    }

    /// Whether the suite can run over the action monad of a monoid.
    pub fn takes_monoid(self) -> bool {
        matches!(self, Suite::MonadLaws | Suite::Additivity | Suite::Commutativity | Suite::KleisliIso)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// A built-in monoid: free words, or the multiplicative reduct of a semiring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MonoidTag {
    Words,
    Mul(SemiringTag),
}

impl MonoidTag {
    pub fn commutative(self) -> bool {
        self != MonoidTag::Words
    }
}

impl fmt::Display for MonoidTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidTag::Words => f.write_str("free-words"),
            MonoidTag::Mul(tag) => write!(f, "{tag}-mul"),
        }
    }
}

impl FromStr for MonoidTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "free-words" {
            return Ok(MonoidTag::Words);
        }
        s.strip_suffix("-mul")
            .and_then(|base| base.parse().ok())
            .map(MonoidTag::Mul)
            .ok_or_else(|| Error::UnknownMonoid(s.to_string()))
    }
}

/// One of the three adjunctions with a round-trip driver.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Adjunction {
    MonE,
    SrngE,
    MatH,
}

impl Adjunction {
    pub const ALL: [Adjunction; 3] = [Adjunction::MonE, Adjunction::SrngE, Adjunction::MatH];

    pub fn name(self) -> &'static str {
        match self {
            Adjunction::MonE => "mon-e",
            Adjunction::SrngE => "srng-e",
            Adjunction::MatH => "mat-h",
        }
    }
}

impl fmt::Display for Adjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Adjunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Adjunction::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownSuite(format!("adjunction {s}")))
    }
}

/// What to run: a suite over a semiring (or a monoid), with a seed and a case count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub semiring: SemiringTag,
    pub monoid: Option<MonoidTag>,
    pub seed: u64,
    pub cases: usize,
}

/// The outcome of a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub instance: String,
    pub seed: u64,
    pub cases: usize,
    pub report: LawReport,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.report.all_passed()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} on {} (seed {}, {} cases)", self.suite, self.instance, self.seed, self.cases)?;
        write!(f, "{}", self.report)?;
        let total = self.report.outcomes.len();
        let failed = self.report.failures().count();
        let expected = self.report.outcomes.iter().filter(|o| o.expected_failure && o.passed()).count();
        write!(f, "{} of {total} laws passed", total - failed)?;
        if expected > 0 {
            write!(f, " ({expected} expected-fail)")?;
        }
        writeln!(f, "{}", if failed == 0 { "" } else { "; VIOLATIONS FOUND" })
    }
}

macro_rules! with_semiring {
    ($tag:expr, $s:ident => $body:expr) => {
        match $tag {
            SemiringTag::Nat => {
                type $s = Nat;
                $body
            }
            SemiringTag::Bool => {
                type $s = Boolean;
                $body
            }
            SemiringTag::Tropical => {
                type $s = Tropical;
                $body
            }
            SemiringTag::Rational => {
                type $s = NonNegRational;
                $body
            }
            SemiringTag::Gaussian => {
                type $s = GaussianRational;
                $body
            }
        }
    };
}

fn need_involution(tag: SemiringTag) -> Result<()> {
    if tag.involutive() {
        Ok(())
    } else {
        Err(Error::NoInvolution(tag.name().to_string()))
    }
}

/// Runs a suite. Deterministic for a given configuration.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let s = Sampler::new(config.seed);
    let n = config.cases;
    let tag = config.semiring;
    let (instance, report) = match config.monoid {
        Some(m) if !config.suite.takes_monoid() => {
            return Err(Error::UnknownMonoid(format!("{m} (suite {} runs over semirings only)", config.suite)))
        }
        Some(m) => (format!("A({m})"), monoid_suite(config.suite, m, &s, n)?),
        None => (format!("M_{tag}"), semiring_suite(config.suite, tag, &s, n)?),
    };
    Ok(SuiteReport { suite: config.suite.name().to_string(), instance, seed: config.seed, cases: n, report })
}

fn semiring_suite(suite: Suite, tag: SemiringTag, s: &Sampler, n: usize) -> Result<LawReport> {
    let star = tag.involutive();
    with_semiring!(tag, S => {
        type T = MultisetMonad<S>;
        let mut r = LawReport::new();
        match suite {
            Suite::MonadLaws => {
                r.extend(monad_laws::<T>(s, n));
                r.extend(multiset_oracle_laws::<S>(s, n).prefixed("oracle"));
                if star {
                    r.extend(involution_laws::<T>(s, n));
                }
            }
            Suite::Additivity => {
                r.extend(additivity_laws::<T>(s, n));
                let nat_to_s = canonical::<S>()?;
                r.extend(bc_monad_map_law::<MultisetMonad<Nat>, T>(s, n, "canonical map preserves bc", |phi| {
                    let mut moved = Vec::new();
                    for (x, a) in phi.iter() {
                        moved.push((x.clone(), nat_to_s.apply(a)?));
                    }
                    Ok(Multiset::from_pairs(moved))
                }));
                if star {
                    r.extend(bc_monad_map_law::<T, T>(s, n, "involution preserves bc", |phi| Ok(crate::monadcore::ms_involution(phi))));
                }
                r.extend(at_one_iso_laws::<S>()?);
                if star {
                    r.extend(at_one_star_laws::<S>());
                }
                r.extend(module_laws::<T>(s, n).prefixed("module"));
            }
            Suite::Commutativity => {
                r.extend(commutativity_laws::<T>(s, n, true));
                r.extend(commutative_extras::<T>(s, n));
            }
            Suite::MatcatLaws => {
                r.extend(matcat_laws::<S>(s, n));
                r.extend(homset_iso_laws::<S>()?);
                if star {
                    r.extend(homset_star_laws::<S>());
                }
            }
            Suite::Dagger => {
                need_involution(tag)?;
                r.extend(dagger_laws::<S>(s, n));
                r.extend(homset_star_laws::<S>());
                r.extend(kleisli_dagger_laws::<S>(s, n));
            }
            Suite::Freetheory => {
                r.extend(freetheory_laws::<S>(s, n));
                if star {
                    r.extend(freetheory_involution_laws::<S>(s, n));
                }
            }
            Suite::KleisliIso => {
                r.extend(kleisli_category_laws::<T>(s, n, true));
                r.extend(kleisli_biproduct_laws::<T>(s, n));
                r.extend(kleisli_iso_laws::<S>(s, n));
                if star {
                    r.extend(kleisli_dagger_laws::<S>(s, n));
                }
            }
            Suite::AdjunctionRoundtrips => {
                for adj in Adjunction::ALL {
                    r.extend(roundtrip_report(adj, tag, star, s, n)?.prefixed(adj.name()));
                }
            }
        }
        Ok(r)
    })
}

fn monoid_suite(suite: Suite, m: MonoidTag, s: &Sampler, n: usize) -> Result<LawReport> {
    macro_rules! for_monoid {
        ($m:ident => $body:expr) => {
            match m {
                MonoidTag::Words => {
                    type $m = Word;
                    $body
                }
                MonoidTag::Mul(tag) => with_semiring!(tag, S => {
                    type $m = Multiplicative<S>;
                    $body
                }),
            }
        };
    }
    for_monoid!(M => {
        type T = ActionMonad<M>;
        let mut r = LawReport::new();
        match suite {
            Suite::MonadLaws => {
                r.extend(monad_laws::<T>(s, n));
                r.extend(action_at_one_laws::<M>()?);
            }
            Suite::Additivity => {
                r.record(
                    "T(0) has exactly one value",
                    1,
                    Some(format!("{} has no values over the empty set, so it is not additive", <T as crate::monadcore::Monad>::name())),
                );
            }
            Suite::Commutativity => r.extend(commutativity_laws::<T>(s, n, <M as crate::algebra::Monoid>::commutative())),
            Suite::KleisliIso => r.extend(kleisli_category_laws::<T>(s, n, false)),
            _ => unreachable!("checked by takes_monoid"),
        }
        Ok(r)
    })
}

/// Runs the round trips of one adjunction, over `semiring`.
pub fn run_roundtrip(adjunction: Adjunction, semiring: SemiringTag, involutive: bool, seed: u64, cases: usize) -> Result<SuiteReport> {
    if involutive {
        need_involution(semiring)?;
    }
    let s = Sampler::new(seed);
    let report = roundtrip_report(adjunction, semiring, involutive, &s, cases)?;
    let variant = if involutive { " (involutive)" } else { "" };
    Ok(SuiteReport {
        suite: format!("roundtrip {adjunction}{variant}"),
        instance: semiring.name().to_string(),
        seed,
        cases,
        report,
    })
}

fn roundtrip_report(adjunction: Adjunction, tag: SemiringTag, involutive: bool, s: &Sampler, n: usize) -> Result<LawReport> {
    with_semiring!(tag, S => {
        let mut r = LawReport::new();
        match adjunction {
            Adjunction::MonE => {
                for f in mul_witnesses::<S>()? {
                    r.extend(mon_roundtrip(s, n, &f)?.prefixed(&format!("{}-mul", tag)));
                }
                r.extend(mon_roundtrip(s, n, &word_length_witness::<S>()?)?.prefixed("free-words"));
                for f in word_action_witnesses()? {
                    r.extend(mon_roundtrip(s, n, &f)?.prefixed("free-words"));
                }
                r.extend(mon_identity_oracle::<S>(s, n)?);
            }
            Adjunction::SrngE => {
                let (id, nat) = (srng_identity::<S>()?, srng_canonical::<S>()?);
                r.extend(srng_roundtrip(s, n, &id)?);
                r.extend(srng_roundtrip(s, n, &nat)?);
                r.extend(srng_entrywise(s, n, &id));
                r.extend(srng_entrywise(s, n, &nat));
                r.extend(srng_naturality(s, n, &id, &canonical::<S>()?));
                if involutive {
                    let conj = srng_conjugation::<S>()?;
                    r.extend(srng_roundtrip(s, n, &conj)?);
                    r.extend(srng_entrywise(s, n, &conj));
                    r.extend(srng_involutive(s, n, &id)?.prefixed("involutive"));
                    r.extend(srng_involutive(s, n, &conj)?.prefixed("involutive"));
                }
            }
            Adjunction::MatH => {
                let (id, nat) = (math_identity::<S>()?, math_canonical::<S>()?);
                r.extend(math_roundtrip(s, n, &id)?);
                r.extend(math_roundtrip(s, n, &nat)?);
                r.extend(math_naturality(s, n, &id, &canonical::<S>()?));
                if involutive {
                    let conj = math_conjugation::<S>()?;
                    r.extend(math_roundtrip(s, n, &conj)?);
                    r.extend(math_involutive(s, n, &id)?.prefixed("involutive"));
                    r.extend(math_involutive(s, n, &conj)?.prefixed("involutive"));
                }
            }
        }
        Ok(r)
    })
}

