use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    chord_values, dims_of, enumerate_chords, has_isolated_chord, predicted_dims, random_diagram,
    EnumGuard,
};
use crate::algebra::{rat, span_dim, PairedPoly, Poly, Projection, Rational};
use crate::brauer::{self, BrElement};
use crate::diagram::{flip_vertex, Diagram, ResolveOrder};
use crate::families::{a_seq, closed_form, m_specs, sigma_specs, Element, Family, FamilySpec};
use crate::weight::{
    functional_with, wgl_chord, wso_tilde_with, Evaluator, Functional, WeightFlavor,
};

/// The named verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    LemmaFamilies,
    Brauer,
    Vogel,
    Psi,
    Table1,
    Sigma,
    Coefficients,
    Mprops,
    WRelation,
    Axioms,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::LemmaFamilies,
        Suite::Brauer,
        Suite::Vogel,
        Suite::Psi,
        Suite::Table1,
        Suite::Sigma,
        Suite::Coefficients,
        Suite::Mprops,
        Suite::WRelation,
        Suite::Axioms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LemmaFamilies => "lemma-families",
            Suite::Brauer => "brauer",
            Suite::Vogel => "vogel",
            Suite::Psi => "psi",
            Suite::Table1 => "table1",
            Suite::Sigma => "sigma",
            Suite::Coefficients => "coefficients",
            Suite::Mprops => "mprops",
            Suite::WRelation => "w-relation",
            Suite::Axioms => "axioms",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!(
                    "unknown suite '{s}' (expected all or one of {})",
                    names.join(", ")
                )
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub computed: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "[{tag}] {}: {}", self.suite, c.name)?;
            if !c.passed {
                writeln!(f, "       computed: {}", c.computed)?;
                writeln!(f, "       expected: {}", c.expected)?;
            }
        }
        let good = self.checks.iter().filter(|c| c.passed).count();
        write!(
            f,
            "{}: {good}/{} checks passed",
            self.suite,
            self.checks.len()
        )
    }
}

/// Runs every check of `suite`. Evaluation errors are reported as failed
/// checks, never as errors.
pub fn verify(suite: Suite, ev: &Evaluator) -> SuiteReport {
    let mut c = Checks::default();
    match suite {
        Suite::LemmaFamilies => lemma_families(&mut c, ev),
        Suite::Brauer => brauer_suite(&mut c, ev),
        Suite::Vogel => vogel(&mut c, ev),
        Suite::Psi => psi(&mut c, ev),
        Suite::Table1 => table1(&mut c, ev),
        Suite::Sigma => sigma(&mut c, ev),
        Suite::Coefficients => coefficients(&mut c, ev),
        Suite::Mprops => mprops(&mut c, ev),
        Suite::WRelation => w_relation(&mut c, ev),
        Suite::Axioms => axioms(&mut c, ev),
    }
    SuiteReport {
        suite: suite.name().to_string(),
        checks: c.0,
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        computed: impl ToString,
        expected: impl ToString,
    ) {
        self.0.push(Check {
            name: name.into(),
            passed,
            computed: computed.to_string(),
            expected: expected.to_string(),
        });
    }

    fn equal<T: PartialEq + fmt::Display, E: fmt::Display>(
        &mut self,
        name: impl Into<String>,
        computed: Result<T, E>,
        expected: T,
    ) {
        match computed {
            Ok(v) => {
                let ok = v == expected;
                self.push(name, ok, v, expected)
            }
            Err(e) => self.push(name, false, format!("error: {e}"), expected),
        }
    }
}

fn p(s: &str) -> Poly {
    s.parse().expect("literal polynomial")
}

fn spec(s: &str) -> FamilySpec {
    s.parse().expect("literal family spec")
}

fn values(ev: &Evaluator, s: &FamilySpec) -> Result<PairedPoly, String> {
    let e = s.element().map_err(|e| e.to_string())?;
    e.evaluate_pair(ev).map_err(|e| e.to_string())
}

fn diagram(s: &FamilySpec) -> Result<Diagram, String> {
    match s.element().map_err(|e| e.to_string())? {
        Element::Diagram(d) => Ok(d),
        Element::Combo(_) => Err(format!("{s} is a combination")),
    }
}

fn flavor_value(ev: &Evaluator, s: &FamilySpec, flavor: WeightFlavor) -> Result<Poly, String> {
    values(ev, s).map(|v| match flavor {
        WeightFlavor::Gl => v.gl,
        WeightFlavor::So => v.so,
    })
}

fn lemma_families(c: &mut Checks, ev: &Evaluator) {
    use WeightFlavor::*;
    let cases: [(
        Family,
        &str,
        std::ops::RangeInclusive<usize>,
        &[WeightFlavor],
    ); 4] = [
        (Family::Omega, "omega", 2..=6, &[Gl, So]),
        (Family::L, "L", 1..=5, &[Gl, So]),
        (Family::T, "T", 1..=5, &[Gl, So]),
        (Family::C, "C", 2..=5, &[So]),
    ];
    for (family, name, range, flavors) in cases {
        for k in range {
            let s = spec(&format!("{name}:{k}"));
            for &flavor in flavors {
                let expected = closed_form(family, flavor, k).expect("in range");
                c.equal(
                    format!("{flavor} value of {s}"),
                    flavor_value(ev, &s, flavor),
                    expected,
                );
            }
        }
    }
}

fn psi(c: &mut Checks, ev: &Evaluator) {
    let s = FamilySpec::Psi;
    c.equal(
        "gl value of psi",
        flavor_value(ev, &s, WeightFlavor::Gl),
        p("c^7 + 13*c^5 - 14*c^3"),
    );
    let tilde = diagram(&s).and_then(|d| wso_tilde_with(ev, &d).map_err(|e| e.to_string()));
    c.equal(
        "so value of psi divided by c(c-1), in powers of c-2",
        tilde.map(|t| t.in_ctilde()),
        p("c^5 - 3*c^4 + 34*c^3 - 36*c^2 + 16*c"),
    );
}

fn br(k: usize, expr: &str) -> BrElement {
    brauer::parse(k, expr).expect("literal Brauer expression")
}

fn brauer_suite(c: &mut Checks, ev: &Evaluator) {
    let identities = [
        (2, "a*a", "c*a"),
        (2, "b*b", "1"),
        (2, "a*b", "a"),
        (2, "b*a", "a"),
        (3, "(u+x)*u", "(c-2)*u"),
        (3, "x^3", "x^2 + 2*x"),
        (3, "u+", "d"),
    ];
    for (k, lhs, rhs) in identities {
        let (l, r) = (br(k, lhs), br(k, rhs));
        c.push(format!("{lhs} = {rhs} in Br_{k}"), l == r, l, r);
    }
    for (expr, want) in [("1", "c^2"), ("a", "c"), ("b", "c")] {
        c.equal(
            format!("tr({expr}) in Br_2"),
            Ok::<_, String>(br(2, expr).trace()),
            p(want),
        );
    }
    let cc = p("c^2 - c");
    let chain = [
        (
            "tr(x^2)/(c-1)",
            br(3, "x^2")
                .trace()
                .div_exact(&p("c - 1"))
                .map_err(|e| e.to_string()),
        ),
        ("-tr(x)", Ok(-br(3, "x").trace())),
        ("tr(u)", Ok(br(3, "u").trace())),
        ("-tr(ux)", Ok(-br(3, "u*x").trace())),
        ("tr(ux^2)", Ok(br(3, "u*x^2").trace())),
    ];
    for (name, value) in chain {
        c.equal(format!("{name} = c^2 - c"), value, cc.clone());
    }
    c.equal(
        "tr of the pictured trace example",
        Ok::<_, String>(br(3, "g").trace()),
        Poly::c(),
    );
    for k in 1..=3u32 {
        let lhs = br(3, &format!("(d-h)^{}", 2 * k + 1));
        let mut text = format!("c^{}*d - h", 2 * k);
        for i in 0..k {
            text.push_str(&format!(" + c^{}*(d+e) - c^{}*(f+g)", 2 * i, 2 * i + 1));
        }
        let rhs = br(3, &text);
        c.push(
            format!("(d-h)^{} closed form", 2 * k + 1),
            lhs == rhs,
            lhs,
            rhs,
        );
    }
    for k in 2..=5u32 {
        let s = FamilySpec::Omega(k as usize);
        let gl = br(3, &format!("(d-h)^{k}")).trace();
        c.equal(
            format!("tr((d-h)^{k}) = gl value of omega:{k}"),
            flavor_value(ev, &s, WeightFlavor::Gl),
            gl,
        );
        let so = br(3, &format!("(u+ - u- + x+ - x-)^{k}")).trace();
        c.equal(
            format!("tr((u+x)^{k}) = so value of omega:{k}"),
            flavor_value(ev, &s, WeightFlavor::So),
            so,
        );
    }
}

fn vogel(c: &mut Checks, ev: &Evaluator) {
    let gl_t = Poly::c();
    let so_t = Poly::c_tilde();
    let gl_x3 = p("c^3 + 12*c");
    let so_x3 = p("c^3 - 3*c^2 + 30*c - 24").from_ctilde();
    for base in ["omega:2", "omega:3", "omega:4", "psi"] {
        let b = spec(base);
        let Ok(v) = values(ev, &b) else {
            c.push(format!("value of {base}"), false, "error", "a value");
            continue;
        };
        for (op, gl, so) in [("t", &gl_t, &so_t), ("x3", &gl_x3, &so_x3)] {
            let s = spec(&format!("{op}*{base}"));
            let got = values(ev, &s);
            c.equal(
                format!("gl value of {s}"),
                got.clone().map(|x| x.gl),
                gl * &v.gl,
            );
            c.equal(format!("so value of {s}"), got.map(|x| x.so), so * &v.so);
        }
    }
    for (a, b) in [
        ("L:2", "T:2"),
        ("T:3", "C:3"),
        ("C:2", "L:1"),
        ("T:2", "T:3"),
    ] {
        let sum = spec(&format!("{a}#{b}"));
        let (va, vb, vs) = (values(ev, &spec(a)), values(ev, &spec(b)), values(ev, &sum));
        let (Ok(va), Ok(vb)) = (va, vb) else {
            c.push(format!("values of {a}, {b}"), false, "error", "values");
            continue;
        };
        let gl = (&va.gl * &vb.gl)
            .div_exact(&Poly::c())
            .expect("c divides deframed values");
        let so = (&va.so * &vb.so)
            .div_exact(&Poly::c())
            .expect("c divides deframed values");
        c.equal(format!("gl value of {sum}"), vs.clone().map(|x| x.gl), gl);
        c.equal(format!("so value of {sum}"), vs.map(|x| x.so), so);
    }
}

fn table1(c: &mut Checks, ev: &Evaluator) {
    for n in 1..=4 {
        for l in 1..=3 {
            let values = match chord_values(n, l, EnumGuard::default(), ev) {
                Ok(v) => v,
                Err(e) => {
                    c.push(
                        format!("dims at (n, l) = ({n}, {l})"),
                        false,
                        format!("error: {e}"),
                        "",
                    );
                    continue;
                }
            };
            let report = dims_of(n, l, &values);
            let (h, f, cap) = predicted_dims(n, l);
            let got = (report.dim_h, report.dim_f, report.dim_cap);
            c.push(
                format!("dims at (n, l) = ({n}, {l})"),
                got == (h, f, cap) && report.is_consistent(),
                format!(
                    "dim_H = {}, dim_F = {}, dim_cap = {}, dim_sum = {}",
                    got.0, got.1, got.2, report.dim_sum
                ),
                format!(
                    "dim_H = {h}, dim_F = {f}, dim_cap = {cap}, dim_sum = {}",
                    h + f - cap
                ),
            );
            let kept: Vec<PairedPoly> = enumerate_chords(n, l, EnumGuard::default())
                .expect("guard already passed")
                .zip(&values)
                .filter(|(d, _)| !has_isolated_chord(d))
                .map(|(_, v)| v.clone())
                .collect();
            let without = dims_of(n, l, &kept);
            let same = (without.dim_h, without.dim_f, without.dim_sum)
                == (report.dim_h, report.dim_f, report.dim_sum);
            c.push(
                format!("isolated-chord diagrams do not change ranks at ({n}, {l})"),
                same,
                format!(
                    "{} / {} / {}",
                    without.dim_h, without.dim_f, without.dim_sum
                ),
                format!("{} / {} / {}", report.dim_h, report.dim_f, report.dim_sum),
            );
        }
    }
    for l in [2, 3] {
        let mut list = vec![
            format!("omega:3@{l}"),
            format!("Omega3@{l}"),
            format!("(omega:2#L:1)@{l}"),
            format!("T:3@{l}"),
        ];
        if l >= 3 {
            list.push(format!("C:3@{l}"));
        }
        let vals: Result<Vec<PairedPoly>, String> =
            list.iter().map(|s| values(ev, &spec(s))).collect();
        c.equal(
            format!("low-degree list spans dim_F at (3, {l})"),
            vals.map(|v| span_dim(&v, Projection::So)),
            predicted_dims(3, l).1,
        );
    }
}

fn sigma(c: &mut Checks, ev: &Evaluator) {
    for n in 4..=8 {
        let rank = sigma_specs(n)
            .map_err(|e| e.to_string())
            .and_then(|specs| {
                specs
                    .iter()
                    .map(|s| values(ev, s))
                    .collect::<Result<Vec<_>, _>>()
            })
            .map(|v| span_dim(&v, Projection::Both));
        c.equal(
            format!("rank of (gl, so) on Sigma:{n}"),
            rank,
            n / 2 + n - 4,
        );
    }
}

fn coefficients(c: &mut Checks, ev: &Evaluator) {
    let a = |k: usize| Rational::from_integer(a_seq(k).expect("k >= 2"));
    for n in 7..=9 {
        let specs = sigma_specs(n).expect("n >= 4");
        for s in specs {
            let (so_want, gl_want) = match &s {
                FamilySpec::Tpow(..) => (rat(0), rat(0)),
                FamilySpec::Omega(k) if k % 2 == 1 => (a(*k), rat(0)),
                FamilySpec::Omega(k) => (a(*k), rat(-2)),
                FamilySpec::X3(inner) => match **inner {
                    FamilySpec::Omega(k) => (rat(-24) * a(k), rat(0)),
                    _ => unreachable!("x3 is only applied to wheels"),
                },
                other => unreachable!("unexpected element {other} of Sigma"),
            };
            let d = diagram(&s);
            let so = d
                .clone()
                .and_then(|d| wso_tilde_with(ev, &d).map_err(|e| e.to_string()))
                .map(|t| t.in_ctilde().coeff(1));
            c.equal(format!("c~ coefficient of so~({s})"), so, so_want);
            let gl = d.and_then(|d| {
                ev.evaluate(&d, WeightFlavor::Gl, true)
                    .map_err(|e| e.to_string())
            });
            c.equal(
                format!("c coefficient of gl({s})"),
                gl.map(|g| g.coeff(1)),
                gl_want,
            );
        }
    }
}

enum Expect {
    AtLeast(usize),
    Exactly(usize),
}

fn ord_check(c: &mut Checks, name: String, value: &Poly, want: Expect) {
    let ord = value.ord();
    let shown = ord.map_or("infinite (zero)".to_string(), |o| o.to_string());
    let (ok, expected) = match want {
        Expect::AtLeast(m) => (ord.is_none_or(|o| o >= m), format!(">= {m}")),
        Expect::Exactly(m) => (ord == Some(m), format!("= {m}")),
    };
    c.push(name, ok, shown, expected);
}

fn mprops(c: &mut Checks, ev: &Evaluator) {
    for (n, l) in [(4, 2), (4, 3), (5, 2), (5, 3)] {
        let specs = m_specs(n, l).expect("n >= 4, l >= 2");
        let mut vals = Vec::new();
        for s in &specs {
            let v = match values(ev, s) {
                Ok(v) => v,
                Err(e) => {
                    c.push(
                        format!("value of {s}"),
                        false,
                        format!("error: {e}"),
                        "a value",
                    );
                    continue;
                }
            };
            let FamilySpec::Pad(inner, _) = s else {
                unreachable!("M elements are padded")
            };
            let so2 = v.so.eval_int(2);
            match &**inner {
                FamilySpec::E(_) => {
                    ord_check(c, format!("ord gl({s})"), &v.gl, Expect::AtLeast(l));
                    ord_check(c, format!("ord so({s})"), &v.so, Expect::AtLeast(l));
                    c.push(
                        format!("so({s}) at c = 2 is nonzero"),
                        so2 != rat(0),
                        &so2,
                        "nonzero",
                    );
                }
                FamilySpec::D(i, 0, 0) if *i == n => {
                    ord_check(c, format!("ord gl({s})"), &v.gl, Expect::Exactly(l - i));
                    ord_check(c, format!("ord so({s})"), &v.so, Expect::AtLeast(l));
                }
                FamilySpec::Sum(a, b)
                    if matches!((&**a, &**b), (FamilySpec::D(_, 0, 0), FamilySpec::Omega(_))) =>
                {
                    let FamilySpec::D(i, ..) = **a else {
                        unreachable!()
                    };
                    ord_check(c, format!("ord gl({s})"), &v.gl, Expect::Exactly(l - i));
                    ord_check(c, format!("ord so({s})"), &v.so, Expect::AtLeast(l));
                }
                FamilySpec::D(0, 0, k) if *k == n => {
                    ord_check(c, format!("ord so({s})"), &v.so, Expect::Exactly(l - 1));
                }
                FamilySpec::D(_, j, 0) => {
                    ord_check(c, format!("ord so({s})"), &v.so, Expect::Exactly(l + 1 - j));
                }
                FamilySpec::D(i, _, _) => {
                    ord_check(c, format!("ord so({s})"), &v.so, Expect::Exactly(i + 1));
                }
                _ => {
                    ord_check(c, format!("ord gl({s})"), &v.gl, Expect::AtLeast(l));
                    ord_check(c, format!("ord so({s})"), &v.so, Expect::AtLeast(l));
                    c.push(
                        format!("so({s}) at c = 2 vanishes"),
                        so2 == rat(0),
                        &so2,
                        "0",
                    );
                }
            }
            vals.push(v);
        }
        let card = n + l - 3 + (n + l - 1) / 2;
        c.push(
            format!("card of M:{n},{l}"),
            specs.len() == card,
            specs.len(),
            card,
        );
        let rank = span_dim(&vals, Projection::Both);
        c.push(format!("rank of M:{n},{l}"), rank == card, rank, card);
    }
}

fn w_relation(c: &mut Checks, ev: &Evaluator) {
    let w = |s: &FamilySpec, n: usize, l: usize| {
        diagram(s)
            .and_then(|d| functional_with(ev, &d, Functional::W, n, l).map_err(|e| e.to_string()))
    };
    for (n, l) in [(4, 1), (4, 2), (5, 1)] {
        let s = FamilySpec::pad(
            FamilySpec::sum(
                FamilySpec::Omega(2),
                FamilySpec::t_pow(n - 4, FamilySpec::Omega(2)),
            ),
            l,
        );
        let want = Rational::from_integer(
            BigInt::from(18) * BigInt::from(-4).pow(n as u32) * BigInt::from(4).pow(l as u32 - 1),
        );
        c.equal(format!("w({s})"), w(&s, n, l), want);
    }
    let mut zero: Vec<(FamilySpec, usize)> = (2..=6).map(|n| (FamilySpec::Omega(n), n)).collect();
    zero.push((FamilySpec::Psi, 6));
    zero.push((spec("x3*omega:4"), 7));
    for (s, n) in zero {
        c.equal(format!("w({s}) vanishes"), w(&s, n, 1), rat(0));
    }
}

/// Accumulates a property over many diagrams, remembering the first failure.
struct Tally {
    name: String,
    expected: &'static str,
    count: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>, expected: &'static str) -> Self {
        Tally {
            name: name.into(),
            expected,
            count: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self, c: &mut Checks) {
        match self.failure {
            None => c.push(
                self.name,
                true,
                format!("holds on {} cases", self.count),
                self.expected,
            ),
            Some(f) => c.push(self.name, false, f, self.expected),
        }
    }
}

fn axioms(c: &mut Checks, ev: &Evaluator) {
    let mut shapes: Vec<(usize, usize)> = (1..=4).flat_map(|n| [(n, 1), (n, 2)]).collect();
    shapes.push((5, 1));
    let one = rat(1);
    for (n, l) in shapes {
        let tag = format!("({n}, {l})");
        let Ok(diagrams) = enumerate_chords(n, l, EnumGuard::default()) else {
            c.push(format!("enumeration at {tag}"), false, "guard", "diagrams");
            continue;
        };
        let diagrams: Vec<_> = diagrams.collect();
        let values = match chord_values(n, l, EnumGuard::default(), ev) {
            Ok(v) => v,
            Err(e) => {
                c.push(
                    format!("values at {tag}"),
                    false,
                    format!("error: {e}"),
                    "values",
                );
                continue;
            }
        };
        let mut mono = Tally::new(
            format!("framed gl is c^m with m = n + l mod 2 at {tag}"),
            "monomial, coefficient 1, parity n + l",
        );
        let mut at_one = Tally::new(format!("deframed values vanish at c = 1 at {tag}"), "0");
        let mut parity = Tally::new(
            format!("deframed gl has degree <= n + l and parity n + l at {tag}"),
            "only exponents of parity n + l",
        );
        let mut fi = Tally::new(format!("isolated chords give 0 at {tag}"), "0");
        let mut top = Tally::new(
            format!("top coefficients of gl and so agree at {tag}"),
            "equal",
        );
        let mut jones = Tally::new(format!("(-1)^l gl(2) = (-1/2)^n so(-2) at {tag}"), "equal");
        let mut so_one = Tally::new(
            format!("one circle: so vanishes at 2, c(c-1) divides it at {tag}"),
            "so(2) = 0 and divisible",
        );
        let half = rat(-1) / rat(2);
        for (d, v) in diagrams.iter().zip(&values) {
            let show = || format!("{:?}: gl = {}, so = {}", d.diagram(), v.gl, v.so);
            let framed = wgl_chord(d);
            let ok = framed
                .degree()
                .is_some_and(|m| framed == Poly::monomial(one.clone(), m) && m % 2 == (n + l) % 2);
            mono.record(ok, || format!("{:?}: {framed}", d.diagram()));
            at_one.record(v.gl.eval(&one) == rat(0) && v.so.eval(&one) == rat(0), show);
            let exps_ok = v.gl.degree().is_none_or(|deg| deg <= n + l)
                && v.gl
                    .coeffs()
                    .iter()
                    .enumerate()
                    .all(|(i, x)| *x == rat(0) || i % 2 == (n + l) % 2);
            parity.record(exps_ok, show);
            if has_isolated_chord(d) {
                fi.record(v.gl.is_zero() && v.so.is_zero(), show);
            }
            top.record(v.gl.coeff(n + l) == v.so.coeff(n + l), show);
            let lhs = rat(-1).pow(l as i32) * v.gl.eval_int(2);
            let rhs = half.pow(n as i32) * v.so.eval_int(-2);
            jones.record(lhs == rhs, show);
            if l == 1 {
                let divisible = v.so.div_exact(&p("c^2 - c")).is_ok();
                so_one.record(v.so.eval_int(2) == rat(0) && divisible, show);
            }
        }
        for t in [mono, at_one, parity, fi, top, jones] {
            t.finish(c);
        }
        if l == 1 {
            so_one.finish(c);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut order = Tally::new(
        "STU resolution order does not change values",
        "equal for first, last and seeded orders",
    );
    let mut antisym = Tally::new("flipping a vertex negates both values", "negated");
    let shapes = [
        (1, 4, 2),
        (1, 4, 4),
        (2, 3, 3),
        (1, 6, 2),
        (2, 4, 4),
        (1, 3, 5),
        (3, 4, 2),
    ];
    for round in 0..6 {
        for &(l, legs, verts) in &shapes {
            let Some(d) = random_diagram(&mut rng, l, legs, verts) else {
                continue;
            };
            let show = || format!("{d:?}");
            let base = ev.evaluate_pair(&d, true);
            let orders = [
                ResolveOrder::First,
                ResolveOrder::Last,
                ResolveOrder::Seeded(rng.gen()),
            ];
            let same = orders.iter().all(|&o| {
                let other = ev.clone().with_order(o).evaluate_pair(&d, true);
                matches!((&base, &other), (Ok(a), Ok(b)) if a == b)
            });
            order.record(same, show);
            let v = rng.gen_range(0..d.vertex_count());
            let flipped = flip_vertex(&d, v)
                .ok()
                .and_then(|f| ev.evaluate_pair(&f, true).ok());
            let neg = match (&base, flipped) {
                (Ok(a), Some(b)) => b.gl == -&a.gl && b.so == -&a.so,
                _ => false,
            };
            antisym.record(neg, || format!("round {round}, vertex {v} of {d:?}"));
        }
    }
    order.finish(c);
    antisym.finish(c);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        let ev = Evaluator::new();
        for s in [Suite::Psi, Suite::Brauer, Suite::WRelation] {
            let r = verify(s, &ev);
            assert!(r.passed(), "{r}");
        }
    }
}
