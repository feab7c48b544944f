use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sikorski_core::engine::{entails_bounded, DEFAULT_MAX_SUCCEDENT};
use sikorski_core::generated::{generate_boolean_algebra_capped, DEFAULT_MAX_CLASSES};
use sikorski_core::hom::Flavor;
use sikorski_core::{
    booleanization, conservativity_counterexample, enumerate_homs, semantic_entails,
    sikorski_extend, BooleanAlgebra, Embedding, EntailmentContext, Error as CoreError,
    ExtensionProblem,
};

use crate::docs::{load_hom, load_lattice, load_sequent, LoadError};

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a lattice document and print its canonical form.
    Validate { file: PathBuf },
    /// Decide a sequent.
    Entails(EntailsArgs),
    /// Enumerate the homomorphisms L -> B.
    Models(ModelsArgs),
    /// Extend a hom along a sublattice embedding.
    Extend(ExtendArgs),
    /// Map a lattice onto its regular elements by double negation.
    Booleanize {
        #[arg(long)]
        lattice: PathBuf,
    },
    /// Build the Boolean algebra generated by L x 2.
    Generate {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_CLASSES)]
        max_classes: usize,
    },
    /// Show that a non-complemented lattice is not conservative.
    Counterexample {
        #[arg(long)]
        lattice: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FlavorArg {
    Lattice,
    Heyting,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Lattice => Flavor::Lattice,
            FlavorArg::Heyting => Flavor::Heyting,
        }
    }
}

#[derive(Debug, Args)]
pub struct EntailsArgs {
    #[arg(long)]
    lattice: PathBuf,
    #[arg(long)]
    algebra: String,
    #[arg(long)]
    sequent: PathBuf,
    #[arg(long, value_enum, default_value = "lattice")]
    flavor: FlavorArg,
    /// Also print the first consistent counter-tuple when not entailed.
    #[arg(long)]
    witness: bool,
    /// Print the first countermodel when not entailed.
    #[arg(long)]
    countermodel: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_SUCCEDENT)]
    max_succedent: usize,
}

#[derive(Debug, Args)]
pub struct ModelsArgs {
    #[arg(long)]
    lattice: PathBuf,
    #[arg(long)]
    algebra: String,
    #[arg(long, value_enum, default_value = "lattice")]
    flavor: FlavorArg,
    #[arg(long, conflicts_with = "list")]
    count: bool,
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Args)]
pub struct ExtendArgs {
    #[arg(long)]
    sub: PathBuf,
    #[arg(long = "super")]
    sup: PathBuf,
    #[arg(long)]
    embedding: PathBuf,
    #[arg(long)]
    hom: PathBuf,
    #[arg(long)]
    algebra: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

/// What a successful run prints: a machine-readable payload, then an
/// optional human-readable trace.
#[derive(Debug)]
pub struct Envelope {
    pub verdict: Verdict,
    pub payload: Vec<String>,
    pub trace: Vec<String>,
}

impl Envelope {
    fn yes(payload: Vec<String>) -> Self {
        Envelope {
            verdict: Verdict::Yes,
            payload,
            trace: Vec::new(),
        }
    }

    fn with_trace(mut self, trace: Vec<String>) -> Self {
        self.trace = trace;
        self
    }
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn algebra(spec: &str) -> Result<Arc<BooleanAlgebra>, Failure> {
    BooleanAlgebra::from_spec(spec)
        .map(Arc::new)
        .map_err(|e| Failure::Input(format!("--algebra {spec}: {e}")))
}

pub fn run(cmd: Command) -> Result<Envelope, Failure> {
    match cmd {
        Command::Validate { file } => validate(file),
        Command::Entails(args) => entails_cmd(args),
        Command::Models(args) => models(args),
        Command::Extend(args) => extend(args),
        Command::Booleanize { lattice } => booleanize(lattice),
        Command::Generate {
            lattice,
            max_classes,
        } => generate(lattice, max_classes),
        Command::Counterexample { lattice } => counterexample(lattice),
    }
}

fn validate(file: PathBuf) -> Result<Envelope, Failure> {
    let l = load_lattice(&file)?;
    let names = |xs: &mut dyn Iterator<Item = sikorski_core::Elem>| {
        xs.map(|x| l.elem_name(x).to_owned())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let covers: Vec<String> = l
        .covers()
        .iter()
        .map(|&(a, b)| format!("{}<{}", l.elem_name(a), l.elem_name(b)))
        .collect();
    Ok(Envelope::yes(vec![
        format!("name: {}", l.name()),
        format!("elements: {}", names(&mut l.elements())),
        format!("bottom: {}", l.elem_name(l.bottom())),
        format!("top: {}", l.elem_name(l.top())),
        format!(
            "irreducibles: {}",
            names(&mut l.irreducibles().iter().copied())
        ),
        format!("covers: {}", covers.join(" ")),
        "distributive: yes".to_owned(),
    ]))
}

fn entails_cmd(args: EntailsArgs) -> Result<Envelope, Failure> {
    let lattice = load_lattice(&args.lattice)?;
    let ctx = EntailmentContext::new(lattice, algebra(&args.algebra)?, args.flavor.into());
    let seq = load_sequent(&args.sequent, &ctx)?;
    let decision = entails_bounded(&ctx, &seq, args.max_succedent)?;
    if decision.entailed {
        let trace = decision
            .witnesses
            .iter()
            .map(|w| ctx.render_witness(w))
            .collect();
        return Ok(Envelope::yes(vec!["entailed: yes".into()]).with_trace(trace));
    }
    let mut trace = Vec::new();
    if args.witness {
        if let Some(tuple) = &decision.counter_tuple {
            let tuple: Vec<_> = tuple.iter().copied().map(Some).collect();
            trace.push(format!(
                "counter-tuple={} consistent",
                ctx.render_tuple(&tuple)
            ));
        }
    }
    if args.countermodel {
        let verdict = semantic_entails(&ctx, &seq)?;
        match verdict.countermodel {
            Some(m) => trace.push(format!("countermodel: {}", m.hom.render())),
            None => {
                return Err(Failure::Internal(
                    "no countermodel for a sequent that is not entailed".into(),
                ))
            }
        }
    }
    Ok(Envelope {
        verdict: Verdict::No,
        payload: vec!["entailed: no".into()],
        trace,
    })
}

fn models(args: ModelsArgs) -> Result<Envelope, Failure> {
    let lattice = load_lattice(&args.lattice)?;
    let ctx = EntailmentContext::new(lattice, algebra(&args.algebra)?, args.flavor.into());
    let homs = enumerate_homs(&ctx)?;
    if args.count {
        return Ok(Envelope::yes(vec![homs.len().to_string()]));
    }
    Ok(Envelope::yes(homs.iter().map(|m| m.hom.render()).collect()))
}

fn extend(args: ExtendArgs) -> Result<Envelope, Failure> {
    let sub = load_lattice(&args.sub)?;
    let sup = load_lattice(&args.sup)?;
    let b = algebra(&args.algebra)?;
    let phi = load_hom(&args.embedding, &sub, &sup)?;
    let embedding =
        Embedding::new(phi).map_err(|e| LoadError::Invalid(args.embedding.clone(), e))?;
    let alpha = load_hom(&args.hom, &sub, b.lattice())?;
    let problem = ExtensionProblem::new(embedding, alpha, Arc::clone(&b))?;
    let ext = sikorski_extend(&problem)?;
    let trace = ext
        .steps
        .iter()
        .map(|s| {
            let mut line = format!("step {}:", sup.elem_name(s.element));
            for (v, w) in &s.rejected {
                line.push_str(&format!(
                    " reject {} (atom={} lhs={} rhs={});",
                    b.elem_name(*v),
                    b.elem_name(w.atom),
                    sup.elem_name(w.lhs),
                    sup.elem_name(w.rhs)
                ));
            }
            line.push_str(&format!(" choose {}", b.elem_name(s.chosen)));
            line
        })
        .collect();
    Ok(Envelope::yes(vec![format!("beta: {}", ext.beta.render())]).with_trace(trace))
}

fn booleanize(lattice: PathBuf) -> Result<Envelope, Failure> {
    let l = load_lattice(&lattice)?;
    let bz = booleanization(&l)?;
    let alg = &bz.algebra;
    let atoms: Vec<&str> = alg.atoms().iter().map(|&a| alg.elem_name(a)).collect();
    let regulars: Vec<&str> = bz.regulars.iter().map(|&x| l.elem_name(x)).collect();
    Ok(Envelope::yes(vec![
        format!("regular: {}", regulars.join(" ")),
        format!("atoms: {}", atoms.join(" ")),
        format!("map: {}", bz.hom.render()),
    ]))
}

#[derive(Serialize)]
struct GeneratedElement {
    name: String,
    atoms: Vec<String>,
    representative: String,
}

fn generate(lattice: PathBuf, max_classes: usize) -> Result<Envelope, Failure> {
    let l = load_lattice(&lattice)?;
    let g = generate_boolean_algebra_capped(&l, max_classes)?;
    let alg = &g.algebra;
    let ctx = &g.generated.ctx;
    let atom_names = |c| {
        alg.atoms()
            .iter()
            .filter(|&&e| alg.leq(e, c))
            .map(|&e| alg.elem_name(e).to_owned())
            .collect::<Vec<_>>()
    };
    let elements: Vec<GeneratedElement> = alg
        .elements()
        .map(|c| GeneratedElement {
            name: alg.elem_name(c).to_owned(),
            atoms: atom_names(c),
            representative: g.generated.classes[c.0].render(ctx),
        })
        .collect();
    let mut unit = Map::new();
    for (s, &c) in &g.generated.unit {
        unit.insert(ctx.render(s), Value::String(alg.elem_name(c).to_owned()));
    }
    let mut embedding = Map::new();
    for x in l.elements() {
        embedding.insert(
            l.elem_name(x).to_owned(),
            Value::String(alg.elem_name(g.embedding.apply(x)).to_owned()),
        );
    }
    let atoms: Vec<&str> = alg.atoms().iter().map(|&a| alg.elem_name(a)).collect();
    let doc = json!({
        "lattice": l.name(),
        "atoms": atoms,
        "elements": elements,
        "unit": unit,
        "embedding": embedding,
        "unit_checked": g.unit_checked,
    });
    let text = serde_json::to_string_pretty(&doc).map_err(|e| Failure::Internal(e.to_string()))?;
    Ok(Envelope::yes(text.lines().map(str::to_owned).collect()))
}

fn counterexample(lattice: PathBuf) -> Result<Envelope, Failure> {
    let d = load_lattice(&lattice)?;
    let report = match conservativity_counterexample(&d) {
        Ok(r) => r,
        Err(CoreError::NoCounterexample) => {
            return Ok(Envelope {
                verdict: Verdict::No,
                payload: vec!["complemented: true".into()],
                trace: Vec::new(),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let dn = |e| d.elem_name(e).to_owned();
    let sq = &report.square;
    let x: Vec<Value> = report
        .x
        .iter()
        .map(|s| json!([sq.elem_name(s.x), dn(s.a)]))
        .collect();
    let refutations: Vec<Value> = report
        .refutations
        .iter()
        .map(|r| {
            let via: Vec<Value> = r
                .violations
                .iter()
                .map(|v| match *v {
                    sikorski_core::counterexample::Violation::Meet { value } => {
                        json!({"axiom": "meet", "at": "(0,0)", "value": dn(value)})
                    }
                    sikorski_core::counterexample::Violation::Join { value } => {
                        json!({"axiom": "join", "at": "(1,1)", "value": dn(value)})
                    }
                })
                .collect();
            json!({"d": dn(r.d), "violations": via})
        })
        .collect();
    let hom = &report.sub_model.hom;
    let mut sub_model = Map::new();
    for s in hom.domain().elements() {
        sub_model.insert(
            hom.domain().elem_name(s).to_owned(),
            Value::String(dn(hom.apply(s))),
        );
    }
    let doc = json!({
        "complemented": false,
        "d0": dn(report.d0),
        "X": x,
        "refutations": refutations,
        "sub_model": sub_model,
        "sub_model_instances_checked": report.sub_model.instances_checked,
    });
    let text = serde_json::to_string_pretty(&doc).map_err(|e| Failure::Internal(e.to_string()))?;
    Ok(Envelope::yes(text.lines().map(str::to_owned).collect()).with_trace(report.trace()))
}
