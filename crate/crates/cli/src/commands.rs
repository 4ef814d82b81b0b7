//! Commands are trait objects registered by name and looked up at runtime.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use logchern_core::blowup::{
    betti_check, blowup, chern_blowup, log_pullback_check, pullback_checks, validate_center, verify_blowup_formula,
    BlownUpSpace,
};
use logchern_core::catalog;
use logchern_core::charclass::{divisor_grr_check, omx_log_consistency, sheaf_chern_of_divisor};
use logchern_core::divisor::{line_bundle_c1, log_chern, smooth_split_check, strata, union_c1_additivity, StrataData};
use logchern_core::{Cls, Verdict};

use crate::document::{build_model, document_from_entry, parse_space, serialize, DivisorRef, Model};
use crate::error::{CliError, Code};
use crate::report::{Report, RingReport};

/// Options shared by all commands.
#[derive(Clone, Debug, Default)]
pub struct Context {
    pub emit_ring: bool,
    pub catalog_dirs: Vec<PathBuf>,
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    /// Positional arguments, e.g. `SPACE DIVISOR`.
    fn usage(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError>;
}

#[derive(Default)]
pub struct Registry {
    commands: BTreeMap<&'static str, Box<dyn Command>>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    /// Every built-in command.
    pub fn standard() -> Self {
        let mut r = Registry::new();
        r.register(Box::new(LogChern));
        r.register(Box::new(Strata));
        r.register(Box::new(Blowup));
        r.register(Box::new(VerifyBlowup));
        r.register(Box::new(VerifyLogPullback));
        r.register(Box::new(VerifySplit));
        r.register(Box::new(VerifyGrr));
        r.register(Box::new(Catalog));
        r.register(Box::new(CheckIntegrality));
        r
    }

    pub fn register(&mut self, c: Box<dyn Command>) {
        self.commands.insert(c.name(), c);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands.get(name).map(|b| b.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.commands.keys().copied().collect()
    }

    pub fn commands(&self) -> impl Iterator<Item = &dyn Command> {
        self.commands.values().map(|b| b.as_ref())
    }

    pub fn run(&self, name: &str, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let cmd = self.get(name).ok_or_else(|| {
            CliError::input(Code::UnknownCommand, format!("unknown command `{name}`; known: {}", self.names().join(", ")))
        })?;
        cmd.run(ctx, args)
    }
}

fn expect_args<'a>(cmd: &dyn Command, args: &'a [String], min: usize, max: usize) -> Result<&'a [String], CliError> {
    if args.len() < min || args.len() > max {
        return Err(CliError::input(
            Code::Usage,
            format!("usage: {} {} ({} argument(s) given)", cmd.name(), cmd.usage(), args.len()),
        ));
    }
    Ok(args)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(Code::Io, format!("{}: {e}", path.display())))
}

fn load_file(path: &Path) -> Result<Model, CliError> {
    let text = read_file(path)?;
    let doc = parse_space(&text).map_err(|error| CliError::Parse { source_name: path.display().to_string(), error })?;
    build_model(&doc)
}

/// `*.space` files in a catalog directory, keyed by their `space` name.
fn scan_catalog_dir(dir: &Path) -> Result<BTreeMap<String, PathBuf>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::input(Code::Io, format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().map_or(false, |x| x == "space"))
        .collect();
    paths.sort();
    let mut out = BTreeMap::new();
    for p in paths {
        let doc = parse_space(&read_file(&p)?).map_err(|error| CliError::Parse { source_name: p.display().to_string(), error })?;
        if let Some(prev) = out.insert(doc.name.clone(), p.clone()) {
            return Err(CliError::input(
                Code::Duplicate,
                format!("space `{}` defined in both {} and {}", doc.name, prev.display(), p.display()),
            ));
        }
    }
    Ok(out)
}

/// Resolves `catalog:NAME` (built-in, then catalog directories) or a path.
pub fn load_space(ctx: &Context, reference: &str) -> Result<Model, CliError> {
    let Some(name) = reference.strip_prefix("catalog:") else {
        return load_file(Path::new(reference));
    };
    if catalog::names().contains(&name) {
        let entry = catalog::entry(name).map_err(|e| CliError::core("catalog", e))?;
        return Ok(Model::from_entry(&entry));
    }
    for dir in &ctx.catalog_dirs {
        if let Some(p) = scan_catalog_dir(dir)?.get(name) {
            return load_file(p);
        }
    }
    Err(CliError::input(
        Code::UnknownObject,
        format!("no catalog space `{name}`; built-in: {}", catalog::names().join(", ")),
    ))
}

fn core<T>(what: &str, r: logchern_core::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::core(what, e))
}

fn model_blowup(model: &Model, center: &str) -> Result<BlownUpSpace, CliError> {
    let c = model.center(center)?;
    core(&format!("center {center}"), blowup(c))
}

fn divisor_strata(model: &Model, name: &str) -> Result<(StrataData, bool), CliError> {
    Ok(match model.divisor(name)? {
        DivisorRef::Sc(a) => (strata(a), true),
        DivisorRef::Nc(d) => (d.clone(), false),
    })
}

struct LogChern;

impl Command for LogChern {
    fn name(&self) -> &'static str {
        "logchern"
    }
    fn usage(&self) -> &'static str {
        "SPACE DIVISOR"
    }
    fn summary(&self) -> &'static str {
        "total Chern class of the log tangent bundle"
    }
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let args = expect_args(self, args, 2, 2)?;
        let model = load_space(ctx, &args[0])?;
        let (d, sc) = divisor_strata(&model, &args[1])?;
        let lc = core("logchern", log_chern(&model.space, &d))?;
        let mut r = Report::new(self.name());
        r.input("space", &args[0]).input("divisor", &args[1]);
        r.class("c(TX(-log V))", &lc);
        r.class("c1(O(V))", &line_bundle_c1(&d));
        r.verdict(&Verdict::classes("c(TX(-log V)) * (1 + sum PD[V^(k)]) = c(TX)", &lc * &d.total(), model.space.tangent_chern().clone()));
        let integ = Verdict::integrality("integrality of c(TX(-log V))", &lc);
        if sc {
            r.verdict(&integ);
        } else {
            r.advisory_verdict(&integ);
            r.note("divisor given by strata: integrality is advisory");
        }
        Ok(r)
    }
}

struct Strata;

impl Command for Strata {
    fn name(&self) -> &'static str {
        "strata"
    }
    fn usage(&self) -> &'static str {
        "SPACE DIVISOR"
    }
    fn summary(&self) -> &'static str {
        "Poincare duals of the crossing strata"
    }
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let args = expect_args(self, args, 2, 2)?;
        let model = load_space(ctx, &args[0])?;
        let mut r = Report::new(self.name());
        r.input("space", &args[0]).input("divisor", &args[1]);
        let (d, sc) = divisor_strata(&model, &args[1])?;
        for k in 1..=d.depth() {
            r.class(format!("PD[V^({k})]"), &d.pd(k));
        }
        r.class("1 + sum PD[V^(k)]", &d.total());
        if let (true, DivisorRef::Sc(a)) = (sc, model.divisor(&args[1])?) {
            r.verdict(&Verdict::classes("1 + sum PD[V^(k)] = prod (1 + v_i)", d.total(), a.product_of_factors()));
        }
        Ok(r)
    }
}

struct Blowup;

impl Command for Blowup {
    fn name(&self) -> &'static str {
        "blowup"
    }
    fn usage(&self) -> &'static str {
        "SPACE CENTER"
    }
    fn summary(&self) -> &'static str {
        "cohomology ring of the blowup along a center"
    }
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let args = expect_args(self, args, 2, 2)?;
        let model = load_space(ctx, &args[0])?;
        let c = model.center(&args[1])?;
        let mut r = Report::new(self.name());
        r.input("space", &args[0]).input("center", &args[1]);
        let checks = validate_center(c);
        r.verdicts(&checks);
        if !logchern_core::verdict::all_hold(&checks) {
            return Ok(r);
        }
        let b = model_blowup(&model, &args[1])?;
        if ctx.emit_ring {
            r.ring = Some(RingReport::new(b.ring()));
        }
        r.verdict(&betti_check(&b));
        r.verdict(&core("integration", b.integration_consistency())?);
        r.verdicts(&core("pullback", pullback_checks(&b))?);
        let n = b.ring().half_top();
        let top = core("integration", b.integrate(&b.exceptional().pow(n)))?;
        r.value(format!("integral of {}^{n}", b.exceptional_name()), &top);
        Ok(r)
    }
}

struct VerifyBlowup;

impl Command for VerifyBlowup {
    fn name(&self) -> &'static str {
        "verify-cor15"
    }
    fn usage(&self) -> &'static str {
        "SPACE DIVISOR CENTER"
    }
    fn summary(&self) -> &'static str {
        "Chern classes of a blowup along the deepest stratum"
    }
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let args = expect_args(self, args, 3, 3)?;
        let model = load_space(ctx, &args[0])?;
        let arr = model.sc_divisor(&args[1])?;
        let b = model_blowup(&model, &args[2])?;
        let mut r = Report::new(self.name());
        r.input("space", &args[0]).input("divisor", &args[1]).input("center", &args[2]);
        if ctx.emit_ring {
            r.ring = Some(RingReport::new(b.ring()));
        }
        let vs = core("verify", verify_blowup_formula(&b, arr))?;
        if let Ok(c) = chern_blowup(&b, arr) {
            r.class("c(TX~)", &c);
            let top = b.ring().top_degree();
            r.value("integral of c_n(TX~)", &core("integration", b.integrate(&c.component(top)))?);
        }
        r.verdicts(&vs);
        Ok(r)
    }
}

struct VerifyLogPullback;

impl Command for VerifyLogPullback {
    fn name(&self) -> &'static str {
        "verify-logpullback"
    }
    fn usage(&self) -> &'static str {
        "SPACE DIVISOR CENTER"
    }
    fn summary(&self) -> &'static str {
        "log tangent Chern class pulls back along the blowup"
    }
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let args = expect_args(self, args, 3, 3)?;
        let model = load_space(ctx, &args[0])?;
        let arr = model.sc_divisor(&args[1])?;
        let b = model_blowup(&model, &args[2])?;
        let mut r = Report::new(self.name());
        r.input("space", &args[0]).input("divisor", &args[1]).input("center", &args[2]);
        r.verdict(&core("log pullback", log_pullback_check(&b, arr))?);
        Ok(r)
    }
}

struct VerifySplit;

impl Command for VerifySplit {
    fn name(&self) -> &'static str {
        "verify-split"
    }
    fn usage(&self) -> &'static str {
        "SPACE DIVISOR [COMPONENT]"
    }
    fn summary(&self) -> &'static str {
        "splitting off a smooth component, and c1 additivity"
    }
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let args = expect_args(self, args, 2, 3)?;
        let model = load_space(ctx, &args[0])?;
        let arr = model.sc_divisor(&args[1])?;
        if arr.is_empty() {
            return Err(CliError::input(Code::InvalidValue, format!("divisor `{}` has no components", args[1])));
        }
        let index = match args.get(2) {
            None => arr.len() - 1,
            Some(label) => arr.labels().iter().position(|l| l == label).or_else(|| {
                label.parse::<usize>().ok().filter(|i| (1..=arr.len()).contains(i)).map(|i| i - 1)
            })
            .ok_or_else(|| {
                CliError::input(Code::UnknownObject, format!("no component `{label}`; known: {}", arr.labels().join(", ")))
            })?,
        };
        let (rest, v) = arr.split_off(index);
        let mut r = Report::new(self.name());
        r.input("space", &args[0]).input("divisor", &args[1]).input("component", &arr.labels()[index]);
        r.verdict(&core("split", smooth_split_check(&model.space, &strata(&rest), &v))?);
        let single = logchern_core::divisor::ScArrangement::new(arr.ring(), vec![(arr.labels()[index].clone(), v)]);
        let single = core("split", single)?;
        r.verdict(&core("additivity", union_c1_additivity(&rest, &single))?);
        Ok(r)
    }
}

struct VerifyGrr;

impl Command for VerifyGrr {
    fn name(&self) -> &'static str {
        "verify-grr"
    }
    fn usage(&self) -> &'static str {
        "SPACE DIVISOR"
    }
    fn summary(&self) -> &'static str {
        "sheaf Chern character of the divisor against the log tangent class"
    }
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let args = expect_args(self, args, 2, 2)?;
        let model = load_space(ctx, &args[0])?;
        let arr = model.sc_divisor(&args[1])?;
        let mut r = Report::new(self.name());
        r.input("space", &args[0]).input("divisor", &args[1]);
        r.class("c(O_V)", &core("grr", sheaf_chern_of_divisor(&model.space, arr))?);
        r.verdicts(&core("grr", divisor_grr_check(&model.space, arr))?);
        Ok(r)
    }
}

struct Catalog;

impl Command for Catalog {
    fn name(&self) -> &'static str {
        "catalog"
    }
    fn usage(&self) -> &'static str {
        "[NAME]"
    }
    fn summary(&self) -> &'static str {
        "list built-in spaces, or describe one"
    }
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let args = expect_args(self, args, 0, 1)?;
        let mut r = Report::new(self.name());
        let Some(name) = args.first() else {
            for n in catalog::names() {
                let e = core("catalog", catalog::entry(n))?;
                r.note(format!("{n}: {}", e.description));
            }
            for dir in &ctx.catalog_dirs {
                for (n, p) in scan_catalog_dir(dir)? {
                    r.note(format!("{n}: {}", p.display()));
                }
            }
            return Ok(r);
        };
        r.input("space", name);
        let reference = if name.contains(':') || name.contains('/') { name.clone() } else { format!("catalog:{name}") };
        let model = load_space(ctx, &reference)?;
        let space = &model.space;
        r.ring = Some(RingReport::new(space.ring()));
        r.class("c(TX)", space.tangent_chern());
        r.value("euler characteristic", &space.euler_characteristic());
        if let Some(chi) = &model.euler {
            r.verdict(&Verdict::scalars("integral of c_n(TX) equals the recorded Euler characteristic", space.euler_characteristic(), chi.clone()));
        }
        for (n, c) in &model.centers {
            for v in validate_center(c) {
                r.verdict(&Verdict { name: format!("{n}: {}", v.name), ..v });
            }
        }
        r.note(format!("divisors: {}", model.divisors.keys().chain(model.strata.keys()).cloned().collect::<Vec<_>>().join(", ")));
        r.note(format!("centers: {}", model.centers.keys().cloned().collect::<Vec<_>>().join(", ")));
        if catalog::names().contains(&reference.trim_start_matches("catalog:")) {
            let entry = core("catalog", catalog::entry(reference.trim_start_matches("catalog:")))?;
            r.note(format!("space file:\n{}", serialize(&document_from_entry(&entry)).trim_end()));
        }
        Ok(r)
    }
}

struct CheckIntegrality;

impl Command for CheckIntegrality {
    fn name(&self) -> &'static str {
        "check-integrality"
    }
    fn usage(&self) -> &'static str {
        "SPACE DIVISOR"
    }
    fn summary(&self) -> &'static str {
        "integer-coefficient check of the divisor's classes"
    }
    fn run(&self, ctx: &Context, args: &[String]) -> Result<Report, CliError> {
        let args = expect_args(self, args, 2, 2)?;
        let model = load_space(ctx, &args[0])?;
        let (d, sc) = divisor_strata(&model, &args[1])?;
        let mut r = Report::new(self.name());
        r.input("space", &args[0]).input("divisor", &args[1]);
        let mut classes: Vec<(String, Cls)> = vec![("c(TX(-log V))".into(), core("logchern", log_chern(&model.space, &d))?)];
        for k in 1..=d.depth() {
            classes.push((format!("PD[V^({k})]"), d.pd(k)));
        }
        if let DivisorRef::Sc(a) = model.divisor(&args[1])? {
            classes.push(("c(O_V)".into(), core("sheaf", sheaf_chern_of_divisor(&model.space, a))?));
            r.verdict(&core("omx", omx_log_consistency(&model.space, a))?);
        }
        for (name, c) in &classes {
            let v = Verdict::integrality(format!("integrality of {name}"), c);
            if sc {
                r.verdict(&v);
            } else {
                r.advisory_verdict(&v);
            }
        }
        r.note("integrality is checked coefficientwise in the monomial basis; torsion is not detected");
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(cmd: &str, args: &[&str]) -> Result<Report, CliError> {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        Registry::standard().run(cmd, &Context::default(), &args)
    }

    #[test]
    fn registry_contains_every_command() {
        assert_eq!(
            Registry::standard().names(),
            [
                "blowup",
                "catalog",
                "check-integrality",
                "logchern",
                "strata",
                "verify-cor15",
                "verify-grr",
                "verify-logpullback",
                "verify-split"
            ]
        );
        assert_eq!(run("frobnicate", &[]).unwrap_err().code(), Code::UnknownCommand);
    }

    #[test]
    fn toric_plane() {
        let r = run("logchern", &["catalog:P2", "toric"]).unwrap();
        assert_eq!(r.classes[0].inline(), "1");
        assert!(r.passed());
    }

    #[test]
    fn missing_objects() {
        assert_eq!(run("logchern", &["catalog:P2", "nothing"]).unwrap_err().code(), Code::UnknownObject);
        assert_eq!(run("logchern", &["catalog:P9", "toric"]).unwrap_err().code(), Code::UnknownObject);
        assert_eq!(run("blowup", &["catalog:P2", "nowhere"]).unwrap_err().code(), Code::UnknownObject);
        assert_eq!(run("logchern", &["catalog:P2"]).unwrap_err().code(), Code::Usage);
        assert_eq!(run("logchern", &["/nonexistent/file.space", "x"]).unwrap_err().code(), Code::Io);
    }

    #[test]
    fn wrong_arrangement_for_center() {
        let err = run("verify-cor15", &["catalog:P2", "toric", "pt_in_P2"]);
        let r = err.unwrap();
        assert!(!r.passed());
    }
}
