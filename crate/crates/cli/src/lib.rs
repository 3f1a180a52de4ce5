//! Front end for the condense toolkit: argument grammar, dispatch to the
//! core checkers, and report rendering.

mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use condense_core::condensed::{
    atom_prime_criterion, condensed_pair, lemma_a1_certificates, lemma_a_certificate, polynomial_ring_witness, primal,
    star_property, subtle, NonCondensednessCertificate, NonSubtle,
};
use condense_core::dplusxl::{
    factor_in_product, is_condensed_dplusxl, membership_r, r_ideal_product, sm_closed_probe, vs_closed,
    CanonicalRIdeal, DxlSpec, Submodule,
};
use condense_core::exec::Strategy;
use condense_core::ideals::{
    comaximal, ideal_colon, ideal_intersect, ideal_inverse, ideal_product, ideal_sum, is_principal, membership,
    v_closure, v_coprime, IdealHandle,
};
use condense_core::parse::{
    parse_element, parse_element_list, parse_ideal, parse_l_element, parse_number_field, parse_r_element,
    parse_r_ideal, parse_ring, split_top, RingSpec,
};
use condense_core::rings::{enumerate_elements, DomainSpec, RingElement};
use condense_core::Verdict;

pub use report::Report;

#[derive(Parser, Debug, Clone)]
#[command(name = "condense", version, about = "Exact checkers for condensed pairs, certificates and D + X*L[X] rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Product, sum, intersection, colon, inverse, v-closure and membership of ideals
    IdealCalc,
    /// Is IJ equal to {ij}? With --x, decide whether x splits
    CheckCondensedPair,
    /// Does (∩(a_i))(∩(b_j)) = ∩(a_i b_j) hold for --a, --b?
    CheckStar,
    /// Search for y, z showing --x is not primal
    CheckPrimal,
    /// Atom --a is prime iff every b with a ∤ b has (a, b)_v = D
    CheckAtomPrime,
    /// Scan for non-condensedness certificates
    Certificates,
    /// Is Q ⊆ --l vs-closed?
    VsClosed,
    /// Probe 2-generated submodules --a, --b of L for unsplit products
    SmClosed,
    /// Condensedness of a ring DXL(D=...;L=...)
    DplusxlCheck,
    /// Factor --x in the product of canonical ideals --a, --b of D + X*L[X]
    Factor,
    /// Certificate that D[X] is not condensed
    PrWitness,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::IdealCalc => "ideal-calc",
            Command::CheckCondensedPair => "check-condensed-pair",
            Command::CheckStar => "check-star",
            Command::CheckPrimal => "check-primal",
            Command::CheckAtomPrime => "check-atom-prime",
            Command::Certificates => "certificates",
            Command::VsClosed => "vs-closed",
            Command::SmClosed => "sm-closed",
            Command::DplusxlCheck => "dplusxl-check",
            Command::Factor => "factor",
            Command::PrWitness => "pr-witness",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Product,
    Sum,
    Intersection,
    Colon,
    Inverse,
    VClosure,
    Principal,
    Member,
    Comaximal,
    VCoprime,
}

impl Op {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Z, Q, Zsqrt(d), SGR(2,3;trunc=n), NumField(f), D[X] or DXL(D=..;L=..)
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Comma-separated generators or ring element
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Comma-separated generators or ring element
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Ring element; a polynomial in X for D + X*L[X]
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Number field for vs-closed, e.g. NumField(x^3-2)
    #[arg(long, global = true)]
    pub l: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub op: Option<Op>,
    /// Coefficient height for enumerations
    #[arg(long, global = true, env = "CONDENSE_HEIGHT", default_value_t = 10)]
    pub height: u64,
    /// Truncation order for the semigroup ring
    #[arg(long, global = true, env = "CONDENSE_TRUNC", default_value_t = 24)]
    pub trunc: usize,
    /// Search bound; defaults to 2 for vs-closed, sm-closed and dplusxl-check, otherwise to --height
    #[arg(long, global = true, env = "CONDENSE_BOUND")]
    pub bound: Option<u64>,
    /// Emit the report as JSON
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Disable data-parallel sweeps
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] condense_core::Error),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for parse and validation errors, 3 when a witness fails to re-verify.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(condense_core::Error::Consistency(_)) => 3,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

type Out = std::result::Result<Report, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn inconsistent(msg: impl Into<String>) -> CliError {
    CliError::Core(condense_core::Error::Consistency(msg.into()))
}

fn need<'a>(v: &'a Option<String>, flag: &str, cmd: Command) -> std::result::Result<&'a str, CliError> {
    v.as_deref().ok_or_else(|| usage(format!("{} needs --{flag}", cmd.name())))
}

impl Opts {
    fn strategy(&self) -> Strategy {
        if self.sequential {
            Strategy::Sequential
        } else {
            Strategy::default()
        }
    }

    fn bound_for(&self, cmd: Command) -> u64 {
        self.bound.unwrap_or(match cmd {
            Command::VsClosed | Command::SmClosed | Command::DplusxlCheck => 2,
            _ => self.height,
        })
    }

    fn ring(&self, cmd: Command) -> std::result::Result<RingSpec, CliError> {
        Ok(parse_ring(need(&self.ring, "ring", cmd)?, self.trunc)?)
    }

    fn domain(&self, cmd: Command) -> std::result::Result<DomainSpec, CliError> {
        match self.ring(cmd)? {
            RingSpec::Domain(d) => Ok(d),
            _ => Err(usage(format!("{} needs a domain: Z, Q, Zsqrt(d), SGR(2,3) or NumField(f)", cmd.name()))),
        }
    }

    fn dxl(&self, cmd: Command) -> std::result::Result<DxlSpec, CliError> {
        match self.ring(cmd)? {
            RingSpec::Dxl(s) => Ok(s),
            _ => Err(usage(format!("{} needs --ring DXL(D=..;L=..)", cmd.name()))),
        }
    }
}

/// Runs one request. Every witness in the report has been re-verified.
pub fn run(cli: &Cli) -> Out {
    let o = &cli.opts;
    match cli.command {
        Command::IdealCalc => ideal_calc(o),
        Command::CheckCondensedPair => check_condensed_pair(o),
        Command::CheckStar => check_star(o),
        Command::CheckPrimal => check_primal(o),
        Command::CheckAtomPrime => check_atom_prime(o),
        Command::Certificates => certificates(o),
        Command::VsClosed => vs(o),
        Command::SmClosed => sm(o),
        Command::DplusxlCheck => dplusxl_check(o),
        Command::Factor => factor(o),
        Command::PrWitness => pr_witness(o),
    }
}

/// Runs and renders as text or, with `--json`, as pretty JSON.
pub fn render(cli: &Cli) -> std::result::Result<String, CliError> {
    let report = run(cli)?;
    Ok(if cli.opts.json { report.to_json() } else { report.to_text() })
}

fn set_verdict<H, F>(r: &mut Report, v: &Verdict<H, F>) {
    r.verdict(v.label());
    if let Verdict::Unknown(sb) = v {
        r.witness("note", &sb.note);
        r.bound("search", sb.bound);
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "Holds"
    } else {
        "Fails"
    }
}

fn ideal_calc(o: &Opts) -> Out {
    let cmd = Command::IdealCalc;
    let op = o.op.ok_or_else(|| usage("ideal-calc needs --op"))?;
    let ring = o.ring(cmd)?;
    if let RingSpec::Dxl(spec) = &ring {
        return ideal_calc_dxl(o, spec, op);
    }
    let RingSpec::Domain(d) = ring else {
        return Err(usage("ideal-calc works over a domain or a DXL ring"));
    };
    let mut r = Report::new(cmd.name(), d.to_string());
    r.witness("op", op.name());
    if op == Op::VCoprime {
        let a = parse_element(&d, need(&o.a, "a", cmd)?)?;
        let b = parse_element(&d, need(&o.b, "b", cmd)?)?;
        let pair = IdealHandle::generated(&d, &[a.clone(), b.clone()])?;
        let holds = v_coprime(&a, &b, &d)?;
        let meet = ideal_intersect(&IdealHandle::principal(&d, &a)?, &IdealHandle::principal(&d, &b)?)?;
        let ab = IdealHandle::principal(&d, &d.mul(&a, &b)?)?;
        r.verdict(yes_no(holds)).witness("a", &a).witness("b", &b);
        if let IdealHandle::Lattice(_) = pair {
            r.witness("closure", v_closure(&pair)?);
        }
        r.step(format!("({a}) ∩ ({b}) = {meet}"));
        let agree = meet.equals(&ab)?;
        r.step(format!("({a}) ∩ ({b}) = ({a})({b}): {agree}"));
        if agree != holds {
            return Err(inconsistent("v-coprimality disagrees with the intersection test"));
        }
        r.cite(&["Lemma A1"]);
        return Ok(r);
    }
    let a = parse_ideal(&d, need(&o.a, "a", cmd)?)?;
    r.witness("A", &a);
    let binary = |r: &mut Report| -> std::result::Result<IdealHandle, CliError> {
        let b = parse_ideal(&d, need(&o.b, "b", cmd)?)?;
        r.witness("B", &b);
        Ok(b)
    };
    match op {
        Op::Product => {
            let b = binary(&mut r)?;
            let p = ideal_product(&a, &b)?;
            for ga in a.generator_elements()? {
                for gb in b.generator_elements()? {
                    let g = d.mul(&ga, &gb)?;
                    check(membership(&g, &p)?, format!("({ga})({gb}) = {g} lies in AB"))?;
                    r.step(format!("({ga})({gb}) = {g} lies in AB"));
                }
            }
            r.verdict("Computed").witness("result", p);
        }
        Op::Sum => {
            let b = binary(&mut r)?;
            let s = ideal_sum(&a, &b)?;
            check(s.contains_ideal(&a)? && s.contains_ideal(&b)?, "A, B ⊆ A + B")?;
            r.step("A ⊆ A + B and B ⊆ A + B");
            r.verdict("Computed").witness("result", s);
        }
        Op::Intersection => {
            let b = binary(&mut r)?;
            let m = ideal_intersect(&a, &b)?;
            check(a.contains_ideal(&m)? && b.contains_ideal(&m)?, "A ∩ B ⊆ A, B")?;
            r.step("A ∩ B ⊆ A and A ∩ B ⊆ B");
            r.verdict("Computed").witness("result", m);
        }
        Op::Colon => {
            let b = binary(&mut r)?;
            let c = ideal_colon(&a, &b)?;
            check(a.contains_ideal(&ideal_product(&c, &b)?)?, "(A : B)B ⊆ A")?;
            r.step("(A : B)B ⊆ A");
            r.verdict("Computed").witness("result", c);
        }
        Op::Inverse => {
            let inv = ideal_inverse(&a)?;
            let p = ideal_product(&a, &inv)?;
            check(IdealHandle::unit(&d)?.contains_ideal(&p)?, "A A^-1 ⊆ D")?;
            r.step(format!("A A^-1 = {p} ⊆ D"));
            r.witness("invertible", p.is_unit_ideal()?);
            r.verdict("Computed").witness("result", inv);
        }
        Op::VClosure => {
            let v = v_closure(&a)?;
            check(v.contains_ideal(&a)?, "A ⊆ A_v")?;
            r.step("A ⊆ A_v");
            r.verdict("Computed").witness("result", v);
        }
        Op::Principal => {
            let v = is_principal(&a)?;
            set_verdict(&mut r, &v);
            match v {
                Verdict::Holds(g) => {
                    r.witness("generator", &g);
                    r.step(format!("generator {g} found"));
                }
                Verdict::Fails(why) => {
                    r.witness("reason", why);
                }
                Verdict::Unknown(_) => {}
            }
        }
        Op::Member => {
            let x = parse_element(&d, need(&o.x, "x", cmd)?)?;
            let m = membership(&x, &a)?;
            r.verdict(yes_no(m)).witness("x", &x);
        }
        Op::Comaximal => {
            let b = binary(&mut r)?;
            let s = ideal_sum(&a, &b)?;
            r.verdict(yes_no(comaximal(&a, &b)?)).witness("A + B", s);
        }
        Op::VCoprime => unreachable!("handled above"),
    }
    Ok(r)
}

fn ideal_calc_dxl(o: &Opts, spec: &DxlSpec, op: Op) -> Out {
    let cmd = Command::IdealCalc;
    let mut r = Report::new(cmd.name(), spec.to_string());
    r.witness("op", op.name());
    let a = parse_r_ideal(spec, need(&o.a, "a", cmd)?)?;
    r.witness("A", a.display(spec));
    match op {
        Op::Product => {
            let b = parse_r_ideal(spec, need(&o.b, "b", cmd)?)?;
            let p = r_ideal_product(spec, &a, &b)?;
            r.witness("B", b.display(spec)).witness("result", p.display(spec));
            r.verdict("Computed");
        }
        Op::Member => {
            let x = parse_r_element(spec, need(&o.x, "x", cmd)?)?;
            r.verdict(yes_no(membership_r(spec, &x, &a))).witness("x", &x);
        }
        _ => return Err(usage("over a DXL ring ideal-calc supports --op product and --op member")),
    }
    Ok(r)
}

fn check(ok: bool, what: impl Into<String>) -> std::result::Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(inconsistent(format!("re-verification failed: {}", what.into())))
    }
}

/// The constant `d` of an ideal `(d, X)` of `D[X]`, written `ideal(d, X)` or `d`.
fn x_ideal_constant(base: &DomainSpec, s: &str) -> std::result::Result<RingElement, CliError> {
    let s = s.trim();
    let inner = s.strip_prefix("ideal(").and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    let items = split_top(inner, ',');
    let consts: Vec<&String> = items.iter().filter(|t| t.trim() != "X").collect();
    if consts.len() != 1 || items.len() > 2 {
        return Err(usage(format!("expected an ideal (d, X) of the polynomial ring, got '{s}'")));
    }
    Ok(parse_element(base, consts[0])?)
}

fn report_certificate(r: &mut Report, cert: &NonCondensednessCertificate) -> std::result::Result<(), CliError> {
    r.certificate_kind = Some(cert.kind().to_string());
    r.witness("certificate", cert);
    r.steps(cert.verify()?);
    Ok(())
}

fn check_condensed_pair(o: &Opts) -> Out {
    let cmd = Command::CheckCondensedPair;
    let bound = o.bound_for(cmd);
    match o.ring(cmd)? {
        RingSpec::Polynomial(base) => {
            let d = x_ideal_constant(&base, need(&o.a, "a", cmd)?)?;
            let e = x_ideal_constant(&base, need(&o.b, "b", cmd)?)?;
            let mut r = Report::new(cmd.name(), format!("{base}[X]"));
            let cert = polynomial_ring_witness(&base, &d, &e)?;
            r.verdict("Fails").witness("x", "X");
            report_certificate(&mut r, &cert)?;
            r.cite(&["Proposition B"]);
            Ok(r)
        }
        RingSpec::Dxl(spec) => {
            let x = parse_r_element(&spec, need(&o.x, "x", cmd)?)?;
            factor_report(cmd, &spec, &x, o, bound)
        }
        RingSpec::Domain(d) => {
            let i = parse_ideal(&d, need(&o.a, "a", cmd)?)?;
            let j = parse_ideal(&d, need(&o.b, "b", cmd)?)?;
            let mut r = Report::new(cmd.name(), d.to_string());
            r.witness("I", &i).witness("J", &j).bound("bound", bound);
            if let Some(xs) = &o.x {
                let x = parse_element(&d, xs)?;
                let v = subtle(&x, &i, &j, bound)?;
                set_verdict(&mut r, &v);
                r.witness("x", &x);
                match v {
                    Verdict::Holds(s) => {
                        let ok = membership(&s.i, &i)? && membership(&s.j, &j)? && d.mul(&s.i, &s.j)? == x;
                        check(ok, format!("{x} = {s}"))?;
                        r.witness("i", &s.i).witness("j", &s.j);
                        r.step(format!("{} ∈ I, {} ∈ J, product {x}", s.i, s.j));
                    }
                    Verdict::Fails(proof) => {
                        NonSubtle { x: x.clone(), proof: proof.clone() }.verify(&i, &j)?;
                        r.certificate_kind = Some("NonSubtleElement".into());
                        r.witness("proof", &proof);
                        r.step(format!("{x} ∈ IJ and the complete factor search finds no i·j"));
                    }
                    Verdict::Unknown(_) => {}
                }
                return Ok(r);
            }
            let v = condensed_pair(&i, &j, bound, o.strategy())?;
            set_verdict(&mut r, &v);
            match v {
                Verdict::Holds(why) => {
                    r.witness("reason", why);
                }
                Verdict::Fails(ns) => {
                    ns.verify(&i, &j)?;
                    r.certificate_kind = Some("NonSubtleElement".into());
                    r.witness("x", &ns.x).witness("proof", &ns.proof);
                    r.step(format!("{} ∈ IJ and the complete factor search finds no i·j", ns.x));
                }
                Verdict::Unknown(_) => {}
            }
            Ok(r)
        }
    }
}

fn check_star(o: &Opts) -> Out {
    let cmd = Command::CheckStar;
    let d = o.domain(cmd)?;
    let as_ = parse_element_list(&d, need(&o.a, "a", cmd)?)?;
    let bs = parse_element_list(&d, need(&o.b, "b", cmd)?)?;
    let mut r = Report::new(cmd.name(), d.to_string());
    if let Some(t) = d.trunc() {
        r.bound("trunc", t as u64);
    }
    let v = star_property(&as_, &bs, &d)?;
    set_verdict(&mut r, &v);
    match v {
        Verdict::Holds(ideal) => {
            r.witness("product", ideal);
        }
        Verdict::Fails(f) => {
            f.verify()?;
            r.witness("lhs", &f.lhs).witness("rhs", &f.rhs).witness("witness", &f.witness);
            r.step(format!("{} ∈ {}", f.witness, f.rhs));
            r.step(format!("{} ∉ {}", f.witness, f.lhs));
        }
        Verdict::Unknown(_) => {}
    }
    r.cite(&["Proposition A6"]);
    if let DomainSpec::SemigroupRing { .. } = d {
        r.cite(&["Corollary A8", "Example A9"]);
    }
    Ok(r)
}

fn check_primal(o: &Opts) -> Out {
    let cmd = Command::CheckPrimal;
    let d = o.domain(cmd)?;
    let bound = o.bound_for(cmd);
    let x = parse_element(&d, need(&o.x, "x", cmd)?)?;
    let mut r = Report::new(cmd.name(), d.to_string());
    r.witness("x", &x).bound("bound", bound);
    let v = primal(&x, &d, bound, o.strategy())?;
    set_verdict(&mut r, &v);
    match v {
        Verdict::Holds(why) => {
            r.witness("reason", why);
        }
        Verdict::Fails(f) => {
            f.verify(&x, &d)?;
            r.witness("y", &f.y).witness("z", &f.z).witness("proof", &f.proof);
            r.step(format!("{x} divides ({})({})", f.y, f.z));
            r.step(format!("no divisor r of {x} has r | {} and {x}/r | {}", f.y, f.z));
        }
        Verdict::Unknown(_) => {}
    }
    r.cite(&["Proposition A6", "Proposition A7"]);
    Ok(r)
}

fn check_atom_prime(o: &Opts) -> Out {
    let cmd = Command::CheckAtomPrime;
    let d = o.domain(cmd)?;
    let bound = o.bound_for(cmd);
    let a = parse_element(&d, need(&o.a, "a", cmd)?)?;
    let mut r = Report::new(cmd.name(), d.to_string());
    r.witness("a", &a).bound("bound", bound);
    let v = atom_prime_criterion(&a, &d, bound, o.strategy())?;
    set_verdict(&mut r, &v);
    match v {
        Verdict::Holds(why) => {
            r.witness("reason", why);
        }
        Verdict::Fails(f) => {
            f.verify(&a, &d)?;
            r.witness("b", &f.b).witness("closure", &f.closure);
            r.step(format!("{a} does not divide {}", f.b));
            r.step(format!("({a}, {})_v ≠ D", f.b));
        }
        Verdict::Unknown(_) => {}
    }
    r.cite(&["Proposition A2", "Corollary A3"]);
    Ok(r)
}

fn certificates(o: &Opts) -> Out {
    let cmd = Command::Certificates;
    let ring = o.ring(cmd)?;
    if let RingSpec::Polynomial(_) = ring {
        return pr_witness(o);
    }
    let RingSpec::Domain(d) = ring else {
        return Err(usage("certificates works over a domain or D[X]; use dplusxl-check for DXL rings"));
    };
    let mut r = Report::new(cmd.name(), d.to_string());
    if let (Some(xs), Some(bs), Some(cs)) = (&o.x, &o.a, &o.b) {
        let (a, b, c) = (parse_element(&d, xs)?, parse_element(&d, bs)?, parse_element(&d, cs)?);
        r.witness("atom", &a).witness("b", &b).witness("c", &c);
        let v = lemma_a_certificate(&a, &b, &c, &d)?;
        match v {
            Verdict::Fails(cert) => {
                r.verdict("Fails");
                report_certificate(&mut r, &cert)?;
            }
            Verdict::Holds(why) => {
                r.verdict("Holds").witness("reason", why);
            }
            Verdict::Unknown(sb) => {
                r.verdict("Unknown").witness("note", sb.note);
            }
        }
        r.cite(&["Lemma A"]);
        return Ok(r);
    }
    let height = o.height;
    r.bound("height", height);
    let certs = lemma_a1_certificates(&d, height, o.strategy())?;
    if certs.is_empty() {
        let status = d.condensed_status();
        r.verdict(if matches!(status, condense_core::rings::CondensedStatus::KnownCondensed(_)) {
            "NoCertificate"
        } else {
            "Unknown"
        });
        r.witness("note", format!("no certificate among 2-generated ideals of height <= {height}"));
    } else {
        r.verdict("Fails");
        r.certificate_kind = Some(certs[0].kind().to_string());
        for (k, c) in certs.iter().enumerate() {
            r.witness(&format!("certificate {}", k + 1), c);
            let lines = c.verify()?;
            r.steps(lines.into_iter().map(|l| format!("[{}] {l}", k + 1)));
        }
    }
    r.cite(&["Lemma A1"]);
    Ok(r)
}

fn first_comaximal_pair(base: &DomainSpec, height: u64) -> std::result::Result<Option<(RingElement, RingElement)>, CliError> {
    let mut nonunits = Vec::new();
    for x in enumerate_elements(base, height) {
        if !x.is_zero() && !base.is_unit(&x)? {
            nonunits.push(x);
        }
    }
    for (k, d) in nonunits.iter().enumerate() {
        for e in &nonunits[k + 1..] {
            if comaximal(&IdealHandle::principal(base, d)?, &IdealHandle::principal(base, e)?)? {
                return Ok(Some((d.clone(), e.clone())));
            }
        }
    }
    Ok(None)
}

fn pr_witness(o: &Opts) -> Out {
    let cmd = Command::PrWitness;
    let base = match o.ring(cmd)? {
        RingSpec::Polynomial(b) | RingSpec::Domain(b) => b,
        RingSpec::Dxl(_) => return Err(usage("pr-witness needs --ring D[X] or D")),
    };
    let mut r = Report::new(cmd.name(), format!("{base}[X]"));
    let pair = match (&o.a, &o.b) {
        (Some(a), Some(b)) => Some((x_ideal_constant(&base, a)?, x_ideal_constant(&base, b)?)),
        (None, None) => {
            r.bound("height", o.height);
            if base.is_field() {
                None
            } else {
                first_comaximal_pair(&base, o.height)?
            }
        }
        _ => return Err(usage("pr-witness takes both --a and --b or neither")),
    };
    match pair {
        Some((d, e)) => {
            let cert = polynomial_ring_witness(&base, &d, &e)?;
            r.verdict("Fails").witness("x", "X");
            report_certificate(&mut r, &cert)?;
        }
        None => {
            r.verdict("Unknown");
            r.witness("note", format!("no comaximal nonunit pair in {base} up to height {}", o.height));
        }
    }
    r.cite(&["Proposition B"]);
    Ok(r)
}

fn vs(o: &Opts) -> Out {
    let cmd = Command::VsClosed;
    let text = o.l.as_deref().or(o.ring.as_deref()).ok_or_else(|| usage("vs-closed needs --l"))?;
    let field = parse_number_field(text)?;
    let bound = o.bound_for(cmd);
    let mut r = Report::new(cmd.name(), field.to_string());
    r.bound("degree", field.degree() as u64);
    if field.degree() == 3 {
        r.bound("bound", bound);
    }
    match vs_closed(&field, bound, o.strategy())? {
        Verdict::Holds(why) => {
            r.verdict("Yes").witness("reason", why);
        }
        Verdict::Fails(w) => {
            let lines = w.verify()?;
            r.verdict("No").witness("pair", &w).witness("independent", w.independent);
            r.witness("refutation", &w.refutation);
            r.steps(lines);
        }
        Verdict::Unknown(sb) => {
            r.verdict("Unknown").witness("note", sb.note);
        }
    }
    r.cite(&["Proposition J"]);
    if field.degree() == 2 {
        r.cite(&["Example M"]);
    }
    Ok(r)
}

fn l_list(spec: &DxlSpec, s: &str) -> std::result::Result<Submodule, CliError> {
    let gens = split_top(s, ',').iter().map(|g| parse_l_element(spec, g)).collect::<condense_core::Result<Vec<_>>>()?;
    Ok(Submodule::generated(spec, &gens)?)
}

fn sm(o: &Opts) -> Out {
    let cmd = Command::SmClosed;
    let spec = o.dxl(cmd)?;
    let bound = o.bound_for(cmd);
    let m = l_list(&spec, need(&o.a, "a", cmd)?)?;
    let n = match &o.b {
        Some(b) => l_list(&spec, b)?,
        None => m.clone(),
    };
    let mut r = Report::new(cmd.name(), spec.to_string());
    r.bound("bound", bound);
    let v = sm_closed_probe(&spec, &m, &n, bound, o.strategy())?;
    set_verdict(&mut r, &v);
    match v {
        Verdict::Holds(why) => {
            r.witness("reason", why);
        }
        Verdict::Fails(f) => {
            check(m.product(&n, &spec)?.contains(&f.gamma), "gamma ∈ MN")?;
            r.witness("gamma", &f.gamma).witness("reason", &f.reason);
            r.step(format!("{} ∈ MN", f.gamma));
        }
        Verdict::Unknown(_) => {}
    }
    r.cite(&["Corollary L"]);
    Ok(r)
}

fn dplusxl_check(o: &Opts) -> Out {
    let cmd = Command::DplusxlCheck;
    let spec = o.dxl(cmd)?;
    let bound = o.bound_for(cmd);
    let mut r = Report::new(cmd.name(), spec.to_string());
    r.bound("bound", bound).bound("relative degree", spec.relative_degree() as u64);
    let v = is_condensed_dplusxl(&spec, bound, o.strategy())?;
    set_verdict(&mut r, &v);
    match &v {
        Verdict::Holds(why) | Verdict::Fails(why) => {
            r.witness("reason", why);
        }
        Verdict::Unknown(_) => {}
    }
    let deg = spec.relative_degree();
    if deg >= 4 {
        r.cite(&["Proposition J", "Corollary L"]);
    } else if deg == 1 {
        r.cite(&["Theorem F"]);
    } else if spec.base_is_field() {
        r.cite(&["Proposition J"]);
        if deg == 2 {
            r.cite(&["Example M"]);
        }
    } else {
        r.cite(&["Corollary L"]);
    }
    if let DomainSpec::QuadraticOrder { .. } = spec.base() {
        if v.is_fails() && deg < 4 {
            r.cite(&["Lemma A1"]);
        }
    }
    Ok(r)
}

fn factor_citations(spec: &DxlSpec, a: &CanonicalRIdeal, b: &CanonicalRIdeal) -> &'static [&'static str] {
    let xl = |c: &CanonicalRIdeal| c.is_full() && c.r() == 1;
    if xl(a) || xl(b) {
        &["Lemma G"]
    } else if a.is_full() || b.is_full() {
        &["Lemma E1"]
    } else if spec.relative_degree() == 1 {
        &["Theorem F"]
    } else if spec.base_is_field() {
        &["Proposition J"]
    } else {
        &["Corollary L"]
    }
}

fn factor_report(cmd: Command, spec: &DxlSpec, x: &condense_core::dplusxl::LPoly, o: &Opts, bound: u64) -> Out {
    let a = parse_r_ideal(spec, need(&o.a, "a", cmd)?)?;
    let b = parse_r_ideal(spec, need(&o.b, "b", cmd)?)?;
    let mut r = Report::new(cmd.name(), spec.to_string());
    r.witness("A", a.display(spec)).witness("B", b.display(spec)).witness("x", x);
    r.bound("bound", bound);
    let v = factor_in_product(spec, x, &a, &b, bound)?;
    set_verdict(&mut r, &v);
    match v {
        Verdict::Holds((fa, fb)) => {
            check(membership_r(spec, &fa, &a), "a ∈ A")?;
            check(membership_r(spec, &fb, &b), "b ∈ B")?;
            check(&fa.mul(&fb) == x, "a*b = x")?;
            r.witness("a", &fa).witness("b", &fb);
            r.step(format!("a = {fa} ∈ {}", a.display(spec)));
            r.step(format!("b = {fb} ∈ {}", b.display(spec)));
            r.step(format!("a*b = {x}"));
        }
        Verdict::Fails(why) => {
            r.witness("reason", why);
        }
        Verdict::Unknown(_) => {}
    }
    r.cite(factor_citations(spec, &a, &b));
    Ok(r)
}

fn factor(o: &Opts) -> Out {
    let cmd = Command::Factor;
    let spec = o.dxl(cmd)?;
    let x = parse_r_element(&spec, need(&o.x, "x", cmd)?)?;
    factor_report(cmd, &spec, &x, o, o.bound_for(cmd))
}

/// Writes the rendered report to `--out` or stdout.
pub fn emit(cli: &Cli, text: &str) -> std::result::Result<(), CliError> {
    match &cli.opts.out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
