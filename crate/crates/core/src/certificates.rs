//! Machine-checkable certificates for the nilpotency class of `Gamma_n`,
//! the derived length of `G = <s_1, alpha_1, mu_X>`, and the resulting
//! dimension obstruction to linearity.
//!
//! Lower bounds are exact witnesses: a word, its bracket expression, and
//! the element it evaluates to. Upper bounds are certified by checking the
//! identities that drive the structural argument (degree drop under the
//! difference operator, commuting shears, vanishing translation parts of
//! commutators) on seeded random instances. Every certificate serializes
//! with its seeds and witnesses, and [`Certificate::check`] re-derives all
//! of it from the serialized data alone.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::jonquieres::{JonqElement, Order};
use crate::parse::parse_word;
use crate::poly::{Degree, Poly};
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use crate::sampling::{self, Rng64, DEFAULT_SEED};
use crate::words::{Assignment, Letter, Word};
use rand::Rng;

pub const DEFAULT_TRIALS: usize = 100;

/// A word, in bracket notation and as a flat reduced word, with its value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub expression: String,
    pub word: String,
    pub value: JonqElement,
}

impl Witness {
    pub fn from_expression(expression: &str) -> Result<Self, Error> {
        let (word, env) = parse_word(expression)?;
        Ok(Witness {
            expression: expression.to_string(),
            word: word.to_string(),
            value: word.evaluate(&env)?,
        })
    }

    /// Re-evaluates both spellings and compares against the stored value.
    fn recheck(&self, label: &str, out: &mut CheckOutcome) {
        for (what, text) in [("expression", &self.expression), ("word", &self.word)] {
            match parse_word(text).and_then(|(w, env)| w.evaluate(&env)) {
                Ok(v) if v == self.value => {}
                Ok(v) => out.fail(format!("{label}: {what} evaluates to {v}, stored {}", self.value)),
                Err(e) => out.fail(format!("{label}: {what} does not evaluate: {e}")),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationCheck {
    pub j: usize,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomizedCheck {
    pub name: String,
    pub seed: u64,
    pub trials: usize,
    pub all_passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    fn merge(&mut self, other: CheckOutcome) {
        self.failures.extend(other.failures);
    }
}

/// `[u, [u, ..., [u, v]...]]` with `k` copies of `u`, as text.
pub fn nested_commutator_expr(u: &str, v: &str, k: usize) -> String {
    (0..k).fold(v.to_string(), |acc, _| format!("[{u},{acc}]"))
}

fn signed_factorial(n: usize) -> BigInt {
    let f: BigInt = (1..=n).map(BigInt::from).product();
    if n % 2 == 1 {
        -f
    } else {
        f
    }
}

fn x_pow(n: usize) -> Poly {
    Poly::monomial(Rat::one(), n)
}

// ---------------------------------------------------------------------------
// Nilpotency class of Gamma_n

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCertificate {
    pub n: usize,
    pub claimed_class: usize,
    pub lower_witness: Witness,
    pub vanishing_witness: Witness,
    pub filtration_checks: Vec<FiltrationCheck>,
    pub randomized_checks: Vec<RandomizedCheck>,
}

/// Certificate that `Gamma_n = <s_1, alpha_{X^n}>` has class exactly `n + 1`.
pub fn gamma_class(n: usize) -> Result<ClassCertificate, Error> {
    gamma_class_with(n, DEFAULT_SEED, DEFAULT_TRIALS)
}

pub fn gamma_class_with(n: usize, seed: u64, trials: usize) -> Result<ClassCertificate, Error> {
    if n == 0 {
        return Err(Error::Precondition("gamma_class needs n >= 1".into()));
    }
    let gen = format!("a({})", x_pow(n));
    let lower = Witness::from_expression(&nested_commutator_expr("s(1)", &gen, n))?;
    let vanishing = Witness::from_expression(&nested_commutator_expr("s(1)", &gen, n + 1))?;
    Ok(ClassCertificate {
        n,
        claimed_class: n + 1,
        lower_witness: lower,
        vanishing_witness: vanishing,
        filtration_checks: filtration_checks(n),
        randomized_checks: class_randomized_checks(n, seed, trials),
    })
}

/// `deg(Delta X^j) = j - 1` for `j = 1..=n`.
fn filtration_checks(n: usize) -> Vec<FiltrationCheck> {
    (1..=n)
        .map(|j| FiltrationCheck {
            j,
            verified: x_pow(j).delta().degree() == Degree::Finite(j - 1),
        })
        .collect()
}

fn class_randomized_checks(n: usize, seed: u64, trials: usize) -> Vec<RandomizedCheck> {
    let mut rng = sampling::rng(seed);
    let shears_commute = (0..trials).all(|_| {
        let p = JonqElement::alpha_poly(sampling::poly(&mut rng, n));
        let q = JonqElement::alpha_poly(sampling::poly(&mut rng, n));
        p.commutator(&q).is_identity()
    });
    let mut rng = sampling::rng(seed.wrapping_add(1));
    let s1 = JonqElement::translation(Rat::one());
    let degree_drop = (0..trials).all(|_| {
        let p = sampling::nonzero_poly(&mut rng, n);
        let d = p.degree().finite().unwrap();
        let a = JonqElement::alpha_poly(p.clone());
        let conj = s1.compose(&a).compose(&s1.inverse());
        let comm = s1.commutator(&a);
        let preserved = conj.in_a(d) && (d == 0 || !conj.in_a(d - 1));
        let lowered = if d == 0 {
            comm.is_identity()
        } else {
            comm.in_a(d - 1)
        };
        preserved && lowered
    });
    vec![
        RandomizedCheck {
            name: "shears of degree <= n commute".into(),
            seed,
            trials,
            all_passed: shears_commute,
        },
        RandomizedCheck {
            name: "s_1 conjugation preserves degree and [s_1, A_d] lies in A_(d-1)".into(),
            seed: seed.wrapping_add(1),
            trials,
            all_passed: degree_drop,
        },
    ]
}

impl ClassCertificate {
    pub fn check(&self) -> CheckOutcome {
        let mut out = CheckOutcome::default();
        let n = self.n;
        out.require(n >= 1, || "n must be at least 1".into());
        out.require(self.claimed_class == n + 1, || {
            format!("claimed class {} is not n + 1 = {}", self.claimed_class, n + 1)
        });
        let gen = format!("a({})", x_pow(n));
        let lower_expr = nested_commutator_expr("s(1)", &gen, n);
        let vanish_expr = nested_commutator_expr("s(1)", &gen, n + 1);
        out.require(self.lower_witness.expression == lower_expr, || {
            format!("lower witness is not the {n}-iterated commutator {lower_expr}")
        });
        out.require(self.vanishing_witness.expression == vanish_expr, || {
            format!("vanishing witness is not the {}-iterated commutator {vanish_expr}", n + 1)
        });
        self.lower_witness.recheck("lower witness", &mut out);
        self.vanishing_witness.recheck("vanishing witness", &mut out);
        let expected = JonqElement::alpha_poly(Poly::constant(Rat::from_bigint(signed_factorial(n))));
        out.require(self.lower_witness.value == expected, || {
            format!("lower witness value {} is not {expected}", self.lower_witness.value)
        });
        out.require(!self.lower_witness.value.is_identity(), || {
            "lower witness is the identity".into()
        });
        out.require(self.vanishing_witness.value.is_identity(), || {
            format!("vanishing witness value {} is not the identity", self.vanishing_witness.value)
        });
        out.require(self.filtration_checks == filtration_checks(n), || {
            "filtration checks do not match a recomputation".into()
        });
        out.require(self.filtration_checks.iter().all(|c| c.verified), || {
            "a filtration check failed".into()
        });
        let (seed, trials) = self
            .randomized_checks
            .first()
            .map(|c| (c.seed, c.trials))
            .unwrap_or((DEFAULT_SEED, 0));
        out.require(self.randomized_checks == class_randomized_checks(n, seed, trials), || {
            "randomized checks do not match a rerun with the recorded seed".into()
        });
        out.require(self.randomized_checks.iter().all(|c| c.all_passed && c.trials > 0), || {
            "a randomized check failed or ran no trials".into()
        });
        out
    }
}

/// `mu_X alpha_{X^n} mu_X^-1 = alpha_{X^(n+1)}`, so `Gamma_n` sits inside
/// `Gamma_(n+1)` up to the conjugation by `mu_X`.
pub fn gamma_chain_check(n: usize) -> bool {
    let m = JonqElement::mu(RatFunc::x()).unwrap();
    let a = JonqElement::alpha_poly(x_pow(n));
    m.compose(&a).compose(&m.inverse()) == JonqElement::alpha_poly(x_pow(n + 1))
}

// ---------------------------------------------------------------------------
// Derived length of G

pub const G_GENERATORS: [&str; 3] = ["s(1)", "a(1)", "m(X)"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvabilityCertificate {
    pub claimed_length: usize,
    pub upper_checks: Vec<RandomizedCheck>,
    pub first_commutator: Witness,
    pub second_commutator: Witness,
    pub lower_witness: Witness,
}

fn g_assignment() -> Assignment {
    let (_, env) = parse_word(&G_GENERATORS.join("*")).expect("generator literals parse");
    env
}

/// A random word in the generators of `G`, 1 to 6 letters with exponents
/// in `{-2, -1, 1, 2}`; with `translation_free` the total exponent of
/// `s(1)` is cancelled at the end so the element has `t = 0`.
fn random_g_word(rng: &mut Rng64, translation_free: bool) -> Word {
    let len = rng.gen_range(1..=6);
    let mut letters = Vec::with_capacity(len + 1);
    let mut s_total = 0;
    for _ in 0..len {
        let gen = G_GENERATORS[rng.gen_range(0..3)];
        let exp = [-2, -1, 1, 2][rng.gen_range(0..4)];
        if gen == "s(1)" {
            s_total += exp;
        }
        letters.push(Letter {
            gen: gen.to_string(),
            exp,
        });
    }
    if translation_free && s_total != 0 {
        letters.push(Letter {
            gen: "s(1)".to_string(),
            exp: -s_total,
        });
    }
    Word::from_letters(letters).reduce()
}

fn solvability_checks(seed: u64, trials: usize) -> Vec<RandomizedCheck> {
    let env = g_assignment();
    let eval = |w: &Word| w.evaluate(&env).expect("generators bound");
    let mut rng = sampling::rng(seed);
    let layer1 = (0..trials).all(|_| {
        let a = eval(&random_g_word(&mut rng, false));
        let b = eval(&random_g_word(&mut rng, false));
        a.commutator(&b).t().is_zero()
    });
    let mut rng = sampling::rng(seed.wrapping_add(1));
    let layer2 = (0..trials).all(|_| {
        let a = eval(&random_g_word(&mut rng, true));
        let b = eval(&random_g_word(&mut rng, true));
        a.t().is_zero() && b.t().is_zero() && a.commutator(&b).g().is_one()
    });
    let mut rng = sampling::rng(seed.wrapping_add(2));
    let shear = |rng: &mut Rng64| {
        let a = eval(&random_g_word(rng, true));
        let b = eval(&random_g_word(rng, true));
        a.commutator(&b)
    };
    let layer3 = (0..trials).all(|_| {
        let a = shear(&mut rng);
        let b = shear(&mut rng);
        let is_shear = |e: &JonqElement| e.t().is_zero() && e.g().is_one();
        is_shear(&a) && is_shear(&b) && a.commutator(&b).is_identity()
    });
    vec![
        RandomizedCheck {
            name: "commutators in G have zero translation part".into(),
            seed,
            trials,
            all_passed: layer1,
        },
        RandomizedCheck {
            name: "commutators of translation-free elements have multiplier 1".into(),
            seed: seed.wrapping_add(1),
            trials,
            all_passed: layer2,
        },
        RandomizedCheck {
            name: "second commutators are shears and commute".into(),
            seed: seed.wrapping_add(2),
            trials,
            all_passed: layer3,
        },
    ]
}

pub const FIRST_COMMUTATOR: &str = "[s(1),m(X)]";
pub const SECOND_COMMUTATOR: &str = "[m(X),a(1)]";

/// Certificate that `G` is solvable of derived length exactly three.
pub fn derived_length_g(seed: u64, trials: usize) -> Result<SolvabilityCertificate, Error> {
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    Ok(SolvabilityCertificate {
        claimed_length: 3,
        upper_checks: solvability_checks(seed, trials),
        first_commutator: Witness::from_expression(FIRST_COMMUTATOR)?,
        second_commutator: Witness::from_expression(SECOND_COMMUTATOR)?,
        lower_witness: Witness::from_expression(&format!("[{FIRST_COMMUTATOR},{SECOND_COMMUTATOR}]"))?,
    })
}

impl SolvabilityCertificate {
    pub fn check(&self) -> CheckOutcome {
        let mut out = CheckOutcome::default();
        out.require(self.claimed_length == 3, || {
            format!("claimed length {} is not 3", self.claimed_length)
        });
        self.first_commutator.recheck("first commutator", &mut out);
        self.second_commutator.recheck("second commutator", &mut out);
        self.lower_witness.recheck("lower witness", &mut out);
        out.require(self.first_commutator.expression == FIRST_COMMUTATOR, || {
            "first commutator is not [s(1),m(X)]".into()
        });
        out.require(self.second_commutator.expression == SECOND_COMMUTATOR, || {
            "second commutator is not [m(X),a(1)]".into()
        });
        let inner = self
            .first_commutator
            .value
            .commutator(&self.second_commutator.value);
        out.require(inner == self.lower_witness.value, || {
            "lower witness is not the commutator of the two first-level witnesses".into()
        });
        let v = &self.lower_witness.value;
        out.require(v.t().is_zero() && v.g().is_one() && !v.f().is_zero(), || {
            format!("lower witness {v} is not a nontrivial shear")
        });
        let (seed, trials) = self
            .upper_checks
            .first()
            .map(|c| (c.seed, c.trials))
            .unwrap_or((DEFAULT_SEED, 0));
        out.require(self.upper_checks == solvability_checks(seed, trials), || {
            "upper checks do not match a rerun with the recorded seed".into()
        });
        out.require(self.upper_checks.iter().all(|c| c.all_passed && c.trials > 0), || {
            "an upper check failed or ran no trials".into()
        });
        out
    }
}

// ---------------------------------------------------------------------------
// Dimension obstruction

/// Smallest `d` with `d^2 >= c`: a faithful characteristic-zero
/// representation of a group containing a torsion-free nilpotent subgroup
/// of class `c` has dimension at least this.
pub fn min_dim_lower_bound(c: u64) -> Result<u64, Error> {
    if c == 0 {
        return Err(Error::Precondition("class must be at least 1".into()));
    }
    let d = c.isqrt();
    Ok(if d * d < c { d + 1 } else { d })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub class: usize,
    pub dim_lower_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonlinearityReport {
    pub max_n: usize,
    pub rows: Vec<ReportRow>,
    pub gamma2_nonabelian: Witness,
    pub gamma2_generator_orders: Vec<(String, String)>,
    pub cited_facts: Vec<String>,
    pub verdict: String,
}

const CITED_FACTS: [&str; 2] = [
    "In characteristic p > 0 every torsion-free nilpotent linear group is abelian; \
     Gamma_2 is torsion-free and nonabelian (witnessed above), which rules out that case.",
    "In characteristic 0 a torsion-free nilpotent subgroup of GL_d of class c yields a \
     nilpotent Lie subalgebra of gl_d of class c, forcing c <= d^2.",
];

pub fn nonlinearity_report(max_n: usize) -> Result<NonlinearityReport, Error> {
    if max_n < 2 {
        return Err(Error::Precondition("nonlinearity_report needs max_n >= 2".into()));
    }
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let cert = gamma_class(n)?;
        if !cert.check().passed() {
            return Err(Error::Precondition(format!("class certificate for n = {n} failed")));
        }
        rows.push(ReportRow {
            n,
            class: cert.claimed_class,
            dim_lower_bound: min_dim_lower_bound(cert.claimed_class as u64)?,
        });
    }
    let gamma2_nonabelian = Witness::from_expression("[s(1),a(X^2)]")?;
    let gamma2_generator_orders = ["s(1)", "a(X^2)"]
        .iter()
        .map(|g| Ok((g.to_string(), crate::parse::eval_word(g)?.order().to_string())))
        .collect::<Result<Vec<_>, Error>>()?;
    let last = rows.last().unwrap();
    let verdict = format!(
        "G, Gamma_infinity and Aut(C^2) contain Gamma_n for every n, of class n + 1; \
         a faithful characteristic-zero representation would need dimension at least \
         ceil(sqrt(n + 1)) for all n (already {} at n = {}), which is unbounded, so none \
         of them is linear over any field.",
        last.dim_lower_bound, last.n
    );
    Ok(NonlinearityReport {
        max_n,
        rows,
        gamma2_nonabelian,
        gamma2_generator_orders,
        cited_facts: CITED_FACTS.iter().map(|s| s.to_string()).collect(),
        verdict,
    })
}

impl NonlinearityReport {
    pub fn check(&self) -> CheckOutcome {
        let mut out = CheckOutcome::default();
        out.require(self.max_n >= 2 && self.rows.len() == self.max_n, || {
            "report must cover n = 1..max_n with max_n >= 2".into()
        });
        for (i, row) in self.rows.iter().enumerate() {
            out.require(row.n == i + 1 && row.class == row.n + 1, || {
                format!("row {i} is not (n, n + 1, _)")
            });
            out.require(min_dim_lower_bound(row.class as u64).ok() == Some(row.dim_lower_bound), || {
                format!("row {} has wrong dimension bound {}", row.n, row.dim_lower_bound)
            });
        }
        out.require(
            self.rows.windows(2).all(|w| w[0].class < w[1].class && w[0].dim_lower_bound <= w[1].dim_lower_bound),
            || "rows are not monotone".into(),
        );
        self.gamma2_nonabelian.recheck("Gamma_2 commutator", &mut out);
        out.require(!self.gamma2_nonabelian.value.is_identity(), || {
            "Gamma_2 commutator witness is trivial".into()
        });
        for (g, order) in &self.gamma2_generator_orders {
            match crate::parse::eval_word(g) {
                Ok(e) => out.require(e.order() == Order::Infinite && order == "infinite", || {
                    format!("generator {g} is not recorded with infinite order")
                }),
                Err(e) => out.fail(format!("generator {g}: {e}")),
            }
        }
        out
    }
}

/// Any certificate document, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Class(ClassCertificate),
    Solvability(SolvabilityCertificate),
    Nonlinearity(NonlinearityReport),
}

impl Certificate {
    pub fn check(&self) -> CheckOutcome {
        match self {
            Certificate::Class(c) => c.check(),
            Certificate::Solvability(c) => c.check(),
            Certificate::Nonlinearity(c) => c.check(),
        }
    }

    /// Checks a JSON document holding one certificate or an array of them.
    pub fn check_json(value: &serde_json::Value) -> Result<CheckOutcome, Error> {
        let certs: Vec<Certificate> = match value {
            serde_json::Value::Array(_) => serde_json::from_value(value.clone()),
            _ => serde_json::from_value(value.clone()).map(|c| vec![c]),
        }
        .map_err(|e| Error::Format(e.to_string()))?;
        let mut out = CheckOutcome::default();
        for c in certs {
            out.merge(c.check());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha_const(c: i64) -> JonqElement {
        JonqElement::alpha_poly(Poly::constant(Rat::from_int(c)))
    }

    #[test]
    fn class_examples() {
        for (n, c) in [(1, -1), (2, 2), (3, -6), (8, 40320)] {
            let cert = gamma_class(n).unwrap();
            assert_eq!(cert.claimed_class, n + 1);
            assert_eq!(cert.lower_witness.value, alpha_const(c));
            assert!(cert.vanishing_witness.value.is_identity());
            assert!(cert.check().passed(), "{:?}", cert.check());
        }
        assert!(gamma_class(0).is_err());
    }

    #[test]
    fn tampered_class_certificate_fails() {
        let mut cert = gamma_class(2).unwrap();
        cert.lower_witness.value = alpha_const(3);
        assert!(!cert.check().passed());
        let mut cert = gamma_class(2).unwrap();
        cert.claimed_class = 4;
        assert!(!cert.check().passed());
        let mut cert = gamma_class(2).unwrap();
        cert.filtration_checks[0].verified = false;
        assert!(!cert.check().passed());
    }

    #[test]
    fn chain() {
        assert!((0..=6).all(gamma_chain_check));
    }

    #[test]
    fn solvability_witnesses() {
        let cert = derived_length_g(7, 30).unwrap();
        let h = RatFunc::new(Poly::from_ints(&[-1, 1]), Poly::x()).unwrap();
        assert_eq!(cert.first_commutator.value, JonqElement::mu(h.clone()).unwrap());
        assert_eq!(cert.second_commutator.value, JonqElement::alpha_poly(Poly::from_ints(&[-1, 1])));
        assert_eq!(cert.lower_witness.value, JonqElement::alpha(-h));
        assert!(cert.check().passed(), "{:?}", cert.check());
        assert!(derived_length_g(7, 0).is_err());
    }

    #[test]
    fn dimension_bound_examples() {
        assert_eq!(min_dim_lower_bound(1).unwrap(), 1);
        assert_eq!(min_dim_lower_bound(10).unwrap(), 4);
        assert_eq!(min_dim_lower_bound(9).unwrap(), 3);
        assert!(min_dim_lower_bound(0).is_err());
    }

    #[test]
    fn report_rows() {
        let r = nonlinearity_report(3).unwrap();
        let rows: Vec<_> = r.rows.iter().map(|r| (r.n, r.class, r.dim_lower_bound)).collect();
        assert_eq!(rows, vec![(1, 2, 2), (2, 3, 2), (3, 4, 2)]);
        assert!(r.check().passed());
        assert!(nonlinearity_report(1).is_err());
    }

    #[test]
    fn json_round_trip_and_check() {
        let cert = Certificate::Class(gamma_class(3).unwrap());
        let v = serde_json::to_value(&cert).unwrap();
        assert!(Certificate::check_json(&v).unwrap().passed());
        let back: Certificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, cert);
    }
}
