use std::fmt::Display;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use vassiliev_core::brauer;
use vassiliev_core::families::{Element, FamilyValue};
use vassiliev_core::lab::{self, DimCache, LabError};
use vassiliev_core::{
    Diagram, EnumGuard, Evaluator, FamilySpec, PairedPoly, Poly, RawDiagram, Suite, WeightFlavor,
};

use crate::{Command, FlavorArg, Format, Global};

pub enum Failure {
    Usage(String),
    Input(String),
    Verification,
}

fn input(e: impl Display) -> Failure {
    Failure::Input(e.to_string())
}

fn lab_error(e: LabError) -> Failure {
    match e {
        LabError::Guard { .. } => Failure::Usage(format!("{e}; pass --no-guard to lift it")),
        other => input(other),
    }
}

pub fn run(g: &Global, cmd: Command) -> Result<(), Failure> {
    if g.format == Format::Csv && !matches!(cmd, Command::Dims { .. }) {
        return Err(Failure::Usage(
            "--format csv is only available for dims".into(),
        ));
    }
    if let Some(jobs) = g.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(input)?;
    }
    let mut ev = Evaluator::new();
    if let Some(m) = g.max_vertices {
        ev = ev.with_max_vertices(m);
    }
    let guard = if g.no_guard {
        EnumGuard::unlimited()
    } else {
        EnumGuard::default()
    };
    let json = g.format == Format::Json;

    match cmd {
        Command::Eval {
            input: path,
            flavor,
            framed,
        } => {
            let d = read_diagram(&path)?;
            let value = ev.evaluate_pair(&d, !framed).map_err(input)?;
            if json {
                let mut obj = json!({
                    "n": d.degree(),
                    "l": d.circle_count(),
                    "deframed": !framed,
                });
                add_values(&mut obj, &value, flavor);
                println!("{obj}");
            } else {
                print_values(&value, flavor);
            }
        }
        Command::Family { spec, out, eval } => {
            let spec: FamilySpec = spec.parse().map_err(input)?;
            let value = spec.build().map_err(input)?;
            if let Some(path) = out {
                let FamilyValue::Diagram(d) = &value else {
                    return Err(Failure::Input(format!("{spec} is not a single diagram")));
                };
                fs::write(&path, RawDiagram::from(d).to_json() + "\n")
                    .map_err(|e| input(format!("{}: {e}", path.display())))?;
            }
            let items = value.into_elements(&spec);
            let single = items.len() == 1 && !spec.is_list();
            let mut rows = Vec::new();
            for item in &items {
                let mut obj = describe(&item.spec, &item.element);
                if let Some(flavor) = eval {
                    let v = item.element.evaluate_pair(&ev).map_err(input)?;
                    add_values(&mut obj, &v, flavor);
                    if !json {
                        if single {
                            print_values(&v, flavor);
                        } else {
                            println!("{}: {}", item.spec, inline_values(&v, flavor));
                        }
                    }
                } else if !json {
                    println!("{}", text_description(&obj));
                }
                rows.push(obj);
            }
            if json {
                println!(
                    "{}",
                    if single {
                        rows.remove(0)
                    } else {
                        Value::Array(rows)
                    }
                );
            }
        }
        Command::Brauer { k, expr, trace } => {
            let e = brauer::parse(k, &expr).map_err(input)?;
            let shown = if trace {
                e.trace().to_string()
            } else {
                e.to_string()
            };
            if json {
                let key = if trace { "trace" } else { "element" };
                println!("{}", json!({ "k": k, "expr": expr, key: shown }));
            } else {
                println!("{shown}");
            }
        }
        Command::Dims { n, l } => {
            let cache = g.cache.as_ref().map(DimCache::new);
            let report = match cache.as_ref().and_then(|c| c.load(n, l)) {
                Some(r) => r,
                None => {
                    let r = lab::dims(n, l, guard, &ev).map_err(lab_error)?;
                    if let Some(c) = &cache {
                        c.store(&r)
                            .map_err(|e| input(format!("{}: {e}", c.dir().display())))?;
                    }
                    r
                }
            };
            match g.format {
                Format::Text => println!("{report}"),
                Format::Csv => println!("{}\n{}", lab::DimReport::CSV_HEADER, report.csv_row()),
                Format::Json => println!("{}", serde_json::to_string(&report).map_err(input)?),
            }
        }
        Command::Rank { list, projection } => {
            let specs = FamilySpec::parse_many(&list).map_err(input)?;
            if specs.is_empty() {
                return Err(Failure::Usage("--list names no elements".into()));
            }
            let report = lab::rank_of(&specs, projection, &ev).map_err(lab_error)?;
            if json {
                println!("{}", serde_json::to_string(&report).map_err(input)?);
            } else {
                println!("{report}");
            }
        }
        Command::Verify { suite } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(Failure::Usage)?]
            };
            let reports: Vec<_> = suites.into_iter().map(|s| lab::verify(s, &ev)).collect();
            if json {
                println!("{}", serde_json::to_string(&reports).map_err(input)?);
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            if !reports.iter().all(|r| r.passed()) {
                return Err(Failure::Verification);
            }
        }
        Command::Enumerate { n, l, count } => {
            if count {
                let total = lab::chord_count(n, l, guard).map_err(lab_error)?;
                if json {
                    println!("{}", json!({ "n": n, "l": l, "count": total.to_string() }));
                } else {
                    println!("{total}");
                }
            } else {
                for d in lab::enumerate_chords(n, l, guard).map_err(lab_error)? {
                    let raw = RawDiagram::from(d.diagram());
                    if json {
                        println!("{}", serde_json::to_string(&raw).map_err(input)?);
                    } else {
                        let (circles, _, edges) = d.diagram().to_parts();
                        println!("{circles:?} {edges:?}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn read_diagram(path: &Path) -> Result<Diagram, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let raw =
        RawDiagram::from_json(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    raw.to_diagram()
        .map_err(|e| input(format!("{}: {e}", path.display())))
}

fn flavors(f: FlavorArg) -> &'static [WeightFlavor] {
    match f {
        FlavorArg::Gl => &[WeightFlavor::Gl],
        FlavorArg::So => &[WeightFlavor::So],
        FlavorArg::Both => &[WeightFlavor::Gl, WeightFlavor::So],
    }
}

fn pick(v: &PairedPoly, f: WeightFlavor) -> &Poly {
    match f {
        WeightFlavor::Gl => &v.gl,
        WeightFlavor::So => &v.so,
    }
}

fn add_values(obj: &mut Value, v: &PairedPoly, f: FlavorArg) {
    for &fl in flavors(f) {
        obj[fl.to_string()] = Value::String(pick(v, fl).to_string());
    }
}

fn print_values(v: &PairedPoly, f: FlavorArg) {
    match f {
        FlavorArg::Both => {
            println!("gl: {}", v.gl);
            println!("so: {}", v.so);
        }
        _ => println!("{}", pick(v, flavors(f)[0])),
    }
}

fn inline_values(v: &PairedPoly, f: FlavorArg) -> String {
    match f {
        FlavorArg::Both => format!("gl = {}, so = {}", v.gl, v.so),
        _ => pick(v, flavors(f)[0]).to_string(),
    }
}

fn describe(spec: &FamilySpec, e: &Element) -> Value {
    let mut obj = json!({ "spec": spec.to_string() });
    match e {
        Element::Diagram(d) => {
            obj["n"] = d.degree().into();
            obj["l"] = d.circle_count().into();
            obj["vertices"] = d.vertex_count().into();
        }
        Element::Combo(c) => {
            if let Some((n, l)) = e.shape() {
                obj["n"] = n.into();
                obj["l"] = l.into();
            }
            obj["terms"] = c.len().into();
        }
    }
    obj
}

fn text_description(obj: &Value) -> String {
    let mut s = format!(
        "{}: degree {}, {} circle(s)",
        obj["spec"].as_str().unwrap_or(""),
        obj["n"],
        obj["l"]
    );
    if let Some(v) = obj.get("vertices") {
        s.push_str(&format!(", {v} internal vertices"));
    }
    if let Some(t) = obj.get("terms") {
        s.push_str(&format!(", combination of {t} diagrams"));
    }
    s
}
