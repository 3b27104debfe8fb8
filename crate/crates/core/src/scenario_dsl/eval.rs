//! Evaluator for parsed scenarios: executes definitions in order, resolves
//! names inside their space context, and produces one record per assertion.
//! Assertion failures never stop evaluation; genuine errors (unknown names,
//! type mismatches, unbuildable rings) abort with a positioned error.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::algebra_core::linalg::dot;
use crate::algebra_core::rat::{fmt_rat, Rat};
use crate::algebra_core::{ClassExpr, GeneratorSpec, GradedAlgebra, Monomial, Presentation};
use crate::cone_lab::{
    canonicalize_ray, dual_cone, is_extremal_generator, is_simplicial, membership, Cone,
};
use crate::moduli_models::{
    build_space, builtin::RingSpace, space_names, LevelElem, LevelParamRing, PairingSpace,
    SpaceModel, TrilinearSpace,
};

use super::ast::{
    Assertion, BoolExpr, ClassDef, ConeDef, ConeExpr, Expr, Pos, RingDef, SConeExpr, SExpr,
    SName, ScenarioAst, Statement,
};
use super::print::claim_str;
use super::report::{AssertionRecord, ScenarioReport};
use super::EvalError;

/// Which side of the pairing a coordinate vector lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Row,
    Col,
}

impl Side {
    fn flipped(self) -> Side {
        match self {
            Side::Row => Side::Col,
            Side::Col => Side::Row,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Row => write!(f, "row"),
            Side::Col => write!(f, "column"),
        }
    }
}

/// A runtime value.
#[derive(Debug, Clone)]
enum Value {
    Num(Rat),
    /// A class in a ring-like space (presented ring or trilinear model).
    Class { space: String, expr: ClassExpr },
    /// An element of the parametric level ring.
    Level(LevelElem),
    /// A coordinate vector on one side of a pairing space.
    PairVec { side: Side, coords: Vec<Rat> },
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Num(_) => "a number",
            Value::Class { .. } => "a class",
            Value::Level(_) => "a level-ring element",
            Value::PairVec { .. } => "a pairing vector",
        }
    }
}

/// A cone tagged with the pairing space and side its generators came from.
#[derive(Debug, Clone)]
pub struct TaggedCone {
    pub space: String,
    pub side: Side,
    pub cone: Cone,
}

fn err(pos: Pos, message: impl Into<String>) -> EvalError {
    EvalError {
        line: pos.line,
        col: pos.col,
        message: message.into(),
    }
}

fn coords_str(coords: &[Rat]) -> String {
    let body: Vec<String> = coords.iter().map(fmt_rat).collect();
    format!("({})", body.join(", "))
}

fn bool_str(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Evaluates a parsed scenario against the built-in models.
pub fn evaluate(file: &str, ast: &ScenarioAst) -> Result<ScenarioReport, EvalError> {
    Evaluator::new().run(file, ast)
}

/// Execution state: built-in and user-defined spaces, named classes, named
/// cones.
pub struct Evaluator {
    spaces: BTreeMap<String, SpaceModel>,
    classes: BTreeMap<(String, String), Value>,
    cones: BTreeMap<String, TaggedCone>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new()
    }
}

impl Evaluator {
    pub fn new() -> Evaluator {
        let mut spaces = BTreeMap::new();
        for name in space_names() {
            let model = build_space(name).expect("built-in space builds");
            spaces.insert((*name).to_owned(), model);
        }
        Evaluator {
            spaces,
            classes: BTreeMap::new(),
            cones: BTreeMap::new(),
        }
    }

    pub fn run(&mut self, file: &str, ast: &ScenarioAst) -> Result<ScenarioReport, EvalError> {
        let mut records = Vec::new();
        for statement in &ast.statements {
            match statement {
                Statement::Ring(r) => self.exec_ring(r)?,
                Statement::Class(c) => self.exec_class(c)?,
                Statement::Cone(c) => self.exec_cone(c)?,
                Statement::Assert(a) => records.push(self.exec_assert(file, a)?),
            }
        }
        Ok(ScenarioReport::new(file, records))
    }

    // ------------------------------------------------------ direct queries

    /// Evaluates one expression in a space context and renders its value:
    /// numbers print as reduced rationals, ring classes integrate, trilinear
    /// classes print canonically, level elements print their normalized
    /// value, pairing vectors print their coordinate tuple.
    pub fn display_value(&self, space: &str, expr: &SExpr) -> Result<String, EvalError> {
        if !self.spaces.contains_key(space) {
            return Err(err(expr.pos, format!("unknown space '{space}'")));
        }
        let pos = expr.pos;
        match self.eval_expr(Some(space), expr)? {
            Value::Num(r) => Ok(fmt_rat(&r)),
            Value::Class { space, expr: class } => match self.spaces.get(&space) {
                Some(SpaceModel::Ring(s)) => {
                    let v = s
                        .algebra()
                        .integrate(&class)
                        .map_err(|e| err(pos, e.to_string()))?;
                    Ok(fmt_rat(&v))
                }
                Some(SpaceModel::Trilinear(t)) => {
                    let canonical = tri_canonical(t, &class, pos)?;
                    Ok(tri_canonical_str(t, &canonical))
                }
                _ => unreachable!("class values only arise on ring-like spaces"),
            },
            Value::Level(x) => {
                let v = self
                    .level_model()
                    .normalized_value(&x)
                    .map_err(|e| err(pos, e.to_string()))?;
                Ok(fmt_rat(&v))
            }
            Value::PairVec { coords, .. } => Ok(coords_str(&coords)),
        }
    }

    // ------------------------------------------------------------ statements

    fn exec_ring(&mut self, r: &RingDef) -> Result<(), EvalError> {
        if self.spaces.contains_key(&r.name) {
            return Err(err(
                r.pos,
                format!("space name '{}' is already defined and cannot be shadowed", r.name),
            ));
        }
        let mut seen = BTreeSet::new();
        for (g, d) in &r.gens {
            if !seen.insert(g.clone()) {
                return Err(err(r.pos, format!("duplicate generator '{g}'")));
            }
            if *d == 0 {
                return Err(err(
                    r.pos,
                    format!("generator '{g}' must have a positive degree"),
                ));
            }
        }
        let gen_names: BTreeSet<String> = r.gens.iter().map(|(g, _)| g.clone()).collect();
        let generators: Vec<GeneratorSpec> = r
            .gens
            .iter()
            .map(|(g, d)| GeneratorSpec::new(g, *d as usize))
            .collect();
        let mut relations = Vec::new();
        for rel in &r.rels {
            relations.push(symbolic_class(rel, &gen_names)?);
        }
        let monomial = self.integral_monomial(&r.integral_monomial, &gen_names)?;
        let mut presentation = Presentation::new(
            generators,
            relations,
            r.top as usize,
            vec![(monomial, r.integral_value.clone())],
        );
        if let Some(scale) = &r.scale {
            presentation = presentation.with_scale(scale.clone());
        }
        let algebra = GradedAlgebra::build(presentation)
            .map_err(|e| err(r.pos, format!("cannot build ring '{}': {e}", r.name)))?;
        self.spaces.insert(
            r.name.clone(),
            SpaceModel::Ring(RingSpace::new(&r.name, algebra)),
        );
        Ok(())
    }

    fn integral_monomial(
        &self,
        expr: &SExpr,
        gens: &BTreeSet<String>,
    ) -> Result<Monomial, EvalError> {
        let class = symbolic_class(expr, gens)?;
        let mut terms = class.terms();
        let single = match (terms.next(), terms.next()) {
            (Some((m, c)), None) if c.is_one() => Some(m.clone()),
            _ => None,
        };
        single.ok_or_else(|| {
            err(
                expr.pos,
                "the integral clause expects a single monomial with coefficient 1",
            )
        })
    }

    fn exec_class(&mut self, c: &ClassDef) -> Result<(), EvalError> {
        let space = c.space.node.clone();
        if !self.spaces.contains_key(&space) {
            return Err(err(c.space.pos, format!("unknown space '{space}'")));
        }
        if self.lookup_name(&space, &c.name).is_some() {
            return Err(err(
                c.pos,
                format!(
                    "name '{}' is already defined in space '{space}' and cannot be shadowed",
                    c.name
                ),
            ));
        }
        let value = self.eval_expr(Some(&space), &c.expr)?;
        self.classes.insert((space, c.name.clone()), value);
        Ok(())
    }

    fn exec_cone(&mut self, c: &ConeDef) -> Result<(), EvalError> {
        if self.cones.contains_key(&c.name) {
            return Err(err(
                c.pos,
                format!("cone name '{}' is already defined", c.name),
            ));
        }
        let tagged = self.cone_literal(&c.members, c.under.as_ref(), c.pos)?;
        self.cones.insert(c.name.clone(), tagged);
        Ok(())
    }

    fn exec_assert(&mut self, file: &str, a: &Assertion) -> Result<AssertionRecord, EvalError> {
        let context = match &a.space {
            Some(s) => {
                if !self.spaces.contains_key(&s.node) {
                    return Err(err(s.pos, format!("unknown space '{}'", s.node)));
                }
                Some(s.node.as_str())
            }
            None => None,
        };
        let desc = claim_str(context, &a.claim);
        let context = context.map(str::to_owned);
        let (computed, expected, pass) = match &a.claim {
            BoolExpr::EqExpr(l, r) => self.eval_eq_expr(context.as_deref(), l, r)?,
            BoolExpr::EqCone(l, r) => {
                let left = self.eval_cone_expr(l)?;
                let right = self.eval_cone_expr(r)?;
                if left.side != right.side {
                    return Err(err(
                        r.pos,
                        format!(
                            "cannot compare a {}-side cone with a {}-side cone",
                            left.side, right.side
                        ),
                    ));
                }
                (
                    left.cone.to_string(),
                    right.cone.to_string(),
                    left.cone == right.cone,
                )
            }
            BoolExpr::Member {
                negated,
                element,
                cone,
            } => {
                let tagged = self.eval_cone_expr(cone)?;
                let coords = self.vector_in(&tagged, element)?;
                let certificate = membership(&tagged.cone, &coords)
                    .map_err(|e| err(element.pos, format!("membership test failed: {e}")))?;
                let fact = certificate.is_inside();
                let truth = fact != *negated;
                (bool_str(truth).to_owned(), "true".to_owned(), truth)
            }
            BoolExpr::Extremal {
                negated,
                element,
                cone,
            } => {
                let tagged = self.eval_cone_expr(cone)?;
                let coords = self.vector_in(&tagged, element)?;
                let ray = canonicalize_ray(&coords)
                    .map_err(|e| err(element.pos, format!("extremality test failed: {e}")))?;
                let fact = match tagged.cone.rays().iter().position(|r| *r == ray) {
                    Some(index) => is_extremal_generator(&tagged.cone, index)
                        .map_err(|e| err(element.pos, format!("extremality test failed: {e}")))?
                        .extremal,
                    // Not parallel to any generator: either an interior
                    // combination or outside the cone; not an extremal ray
                    // either way.
                    None => false,
                };
                let truth = fact != *negated;
                (bool_str(truth).to_owned(), "true".to_owned(), truth)
            }
            BoolExpr::Simplicial { negated, cone } => {
                let tagged = self.eval_cone_expr(cone)?;
                let fact = is_simplicial(&tagged.cone);
                let truth = fact != *negated;
                (bool_str(truth).to_owned(), "true".to_owned(), truth)
            }
        };
        Ok(AssertionRecord {
            file: file.to_owned(),
            line: a.pos.line,
            col: a.pos.col,
            desc,
            expected,
            computed,
            pass,
        })
    }

    // ------------------------------------------------------------ resolution

    /// Resolves a name inside a space: scenario-defined classes first, then
    /// the model's own classes.
    fn lookup_name(&self, space: &str, name: &str) -> Option<Value> {
        if let Some(v) = self.classes.get(&(space.to_owned(), name.to_owned())) {
            return Some(v.clone());
        }
        match self.spaces.get(space)? {
            SpaceModel::Ring(s) => s.resolve(name).map(|expr| Value::Class {
                space: space.to_owned(),
                expr,
            }),
            SpaceModel::Trilinear(t) => t.resolve(name).map(|expr| Value::Class {
                space: space.to_owned(),
                expr,
            }),
            SpaceModel::Pairing(p) => {
                if let Some(row) = p.row(name) {
                    Some(Value::PairVec {
                        side: Side::Row,
                        coords: row.to_vec(),
                    })
                } else {
                    p.col(name).map(|col| Value::PairVec {
                        side: Side::Col,
                        coords: col.to_vec(),
                    })
                }
            }
            SpaceModel::LevelParam(l) => l.resolve(name).map(|e| Value::Level(e.clone())),
        }
    }

    fn pairing_model(&self, space: &str) -> Option<&PairingSpace> {
        match self.spaces.get(space) {
            Some(SpaceModel::Pairing(p)) => Some(p),
            _ => None,
        }
    }

    fn level_model(&self) -> &LevelParamRing {
        match self.spaces.get("SP_level") {
            Some(SpaceModel::LevelParam(l)) => l,
            _ => unreachable!("the level space is always registered"),
        }
    }

    // ------------------------------------------------------------ cones

    fn cone_literal(
        &self,
        members: &[SName],
        under: Option<&SName>,
        pos: Pos,
    ) -> Result<TaggedCone, EvalError> {
        let space = match under {
            Some(s) => {
                if !self.spaces.contains_key(&s.node) {
                    return Err(err(s.pos, format!("unknown space '{}'", s.node)));
                }
                s.node.clone()
            }
            None => "A3_H4".to_owned(),
        };
        if self.pairing_model(&space).is_none() {
            let at = under.map(|s| s.pos).unwrap_or(pos);
            return Err(err(
                at,
                format!("cones require a pairing space, and '{space}' is not one"),
            ));
        }
        let mut side: Option<Side> = None;
        let mut vectors: Vec<Vec<Rat>> = Vec::new();
        for member in members {
            let value = self.lookup_name(&space, &member.node).ok_or_else(|| {
                err(
                    member.pos,
                    format!("unknown class '{}' in space '{space}'", member.node),
                )
            })?;
            let Value::PairVec { side: s, coords } = value else {
                return Err(err(
                    member.pos,
                    format!("'{}' is not a pairing vector", member.node),
                ));
            };
            match side {
                None => side = Some(s),
                Some(prev) if prev != s => {
                    return Err(err(
                        member.pos,
                        format!(
                            "cone members must come from one side of the pairing: '{}' is a {} vector, earlier members are {} vectors",
                            member.node, s, prev
                        ),
                    ));
                }
                Some(_) => {}
            }
            vectors.push(coords);
        }
        let side = side.expect("the grammar guarantees at least one member");
        let dim = vectors[0].len();
        let cone = Cone::from_vectors(dim, &vectors)
            .map_err(|e| err(pos, format!("cannot build cone: {e}")))?;
        Ok(TaggedCone { space, side, cone })
    }

    pub fn eval_cone_expr(&self, cone: &SConeExpr) -> Result<TaggedCone, EvalError> {
        match &cone.node {
            ConeExpr::Named(name) => self.cones.get(&name.node).cloned().ok_or_else(|| {
                err(name.pos, format!("unknown cone '{}'", name.node))
            }),
            ConeExpr::Literal { members, under } => {
                self.cone_literal(members, under.as_ref(), cone.pos)
            }
            ConeExpr::Dual(inner) => {
                let tagged = self.eval_cone_expr(inner)?;
                Ok(TaggedCone {
                    space: tagged.space,
                    side: tagged.side.flipped(),
                    cone: dual_cone(&tagged.cone),
                })
            }
        }
    }

    /// Evaluates an element expression in a cone's space and checks it is a
    /// vector on the cone's side.
    pub fn vector_in(&self, tagged: &TaggedCone, element: &SExpr) -> Result<Vec<Rat>, EvalError> {
        let value = self.eval_expr(Some(&tagged.space), element)?;
        match value {
            Value::PairVec { side, coords } if side == tagged.side => Ok(coords),
            Value::PairVec { side, .. } => Err(err(
                element.pos,
                format!(
                    "the element is a {side} vector but the cone lives on the {} side",
                    tagged.side
                ),
            )),
            other => Err(err(
                element.pos,
                format!("the element must be a pairing vector, not {}", other.kind()),
            )),
        }
    }

    // ------------------------------------------------------------ expressions

    fn eval_expr(&self, context: Option<&str>, expr: &SExpr) -> Result<Value, EvalError> {
        match &expr.node {
            Expr::Num(r) => Ok(Value::Num(r.clone())),
            Expr::Name(name) => {
                let Some(space) = context else {
                    return Err(err(
                        expr.pos,
                        format!(
                            "name '{name}' needs a space context; label the assertion like 'assert SPACE: …'"
                        ),
                    ));
                };
                self.lookup_name(space, name).ok_or_else(|| {
                    err(expr.pos, format!("unknown class '{name}' in space '{space}'"))
                })
            }
            Expr::Neg(inner) => Ok(neg_value(self.eval_expr(context, inner)?)),
            Expr::Add(l, r) => {
                let lv = self.eval_expr(context, l)?;
                let rv = self.eval_expr(context, r)?;
                self.add_values(lv, rv, expr.pos)
            }
            Expr::Sub(l, r) => {
                let lv = self.eval_expr(context, l)?;
                let rv = neg_value(self.eval_expr(context, r)?);
                self.add_values(lv, rv, expr.pos)
            }
            Expr::Mul(l, r) => {
                let lv = self.eval_expr(context, l)?;
                let rv = self.eval_expr(context, r)?;
                self.mul_values(lv, rv, expr.pos)
            }
            Expr::Pow(base, k) => {
                let bv = self.eval_expr(context, base)?;
                self.pow_value(bv, *k, expr.pos)
            }
        }
    }

    fn add_values(&self, a: Value, b: Value, pos: Pos) -> Result<Value, EvalError> {
        use Value::*;
        match (a, b) {
            (Num(x), Num(y)) => Ok(Num(x + y)),
            (Class { space, expr }, Num(n)) | (Num(n), Class { space, expr }) => Ok(Class {
                expr: &expr + &ClassExpr::constant(n),
                space,
            }),
            (Level(x), Num(n)) | (Num(n), Level(x)) => {
                let constant = LevelElem::from_parts(
                    crate::moduli_models::ParamPoly::constant(n),
                    Default::default(),
                    Default::default(),
                    Default::default(),
                );
                Ok(Level(x.add(&constant)))
            }
            (
                Class { space: s1, expr: e1 },
                Class { space: s2, expr: e2 },
            ) => {
                if s1 != s2 {
                    return Err(err(pos, "cannot add classes from different spaces"));
                }
                Ok(Class {
                    space: s1,
                    expr: &e1 + &e2,
                })
            }
            (Level(x), Level(y)) => Ok(Level(x.add(&y))),
            (
                PairVec { side: s1, coords: c1 },
                PairVec { side: s2, coords: c2 },
            ) => {
                if s1 != s2 {
                    return Err(err(
                        pos,
                        format!("cannot add a {s1} vector and a {s2} vector"),
                    ));
                }
                let coords = c1.iter().zip(&c2).map(|(x, y)| x + y).collect();
                Ok(PairVec { side: s1, coords })
            }
            (a, b) => Err(err(
                pos,
                format!("cannot add {} and {}", a.kind(), b.kind()),
            )),
        }
    }

    fn mul_values(&self, a: Value, b: Value, pos: Pos) -> Result<Value, EvalError> {
        use Value::*;
        match (a, b) {
            (Num(x), Num(y)) => Ok(Num(x * y)),
            (Class { space, expr }, Num(n)) | (Num(n), Class { space, expr }) => Ok(Class {
                expr: expr.scale(&n),
                space,
            }),
            (Level(x), Num(n)) | (Num(n), Level(x)) => Ok(Level(
                x.scale_poly(&crate::moduli_models::ParamPoly::constant(n)),
            )),
            (PairVec { side, coords }, Num(n)) | (Num(n), PairVec { side, coords }) => {
                Ok(PairVec {
                    side,
                    coords: coords.iter().map(|c| c * &n).collect(),
                })
            }
            (
                Class { space: s1, expr: e1 },
                Class { space: s2, expr: e2 },
            ) => {
                if s1 != s2 {
                    return Err(err(pos, "cannot multiply classes from different spaces"));
                }
                self.mul_classes(&s1, e1, e2, pos)
            }
            (Level(x), Level(y)) => Ok(Level(x.mul(&y))),
            (
                PairVec { side: s1, coords: c1 },
                PairVec { side: s2, coords: c2 },
            ) => {
                if s1 == s2 {
                    return Err(err(
                        pos,
                        format!("cannot pair two {s1}-side vectors; pair a row with a column"),
                    ));
                }
                Ok(Num(dot(&c1, &c2)))
            }
            (a, b) => Err(err(
                pos,
                format!("cannot multiply {} and {}", a.kind(), b.kind()),
            )),
        }
    }

    /// Class-by-class product, dispatched on the space kind: reduced ring
    /// product on presented rings, degree-counted contraction on the
    /// trilinear model.
    fn mul_classes(
        &self,
        space: &str,
        a: ClassExpr,
        b: ClassExpr,
        pos: Pos,
    ) -> Result<Value, EvalError> {
        match self.spaces.get(space) {
            Some(SpaceModel::Ring(s)) => {
                let product = &a * &b;
                let reduced = s
                    .algebra()
                    .normal_form(&product)
                    .map_err(|e| err(pos, e.to_string()))?;
                Ok(Value::Class {
                    space: space.to_owned(),
                    expr: reduced,
                })
            }
            Some(SpaceModel::Trilinear(t)) => {
                let da = tri_degree(t, &a, pos)?;
                let db = tri_degree(t, &b, pos)?;
                match (da, db) {
                    (1, 1) => Ok(Value::Class {
                        space: space.to_owned(),
                        expr: &a * &b,
                    }),
                    (1, 2) => Ok(Value::Num(
                        t.pair_quadratic(&b, &a, false)
                            .map_err(|e| err(pos, e.to_string()))?,
                    )),
                    (2, 1) => Ok(Value::Num(
                        t.pair_quadratic(&a, &b, false)
                            .map_err(|e| err(pos, e.to_string()))?,
                    )),
                    _ => Err(err(
                        pos,
                        format!("a product of two quadratic classes on '{space}' has no value"),
                    )),
                }
            }
            _ => Err(err(pos, format!("'{space}' does not support class products"))),
        }
    }

    fn pow_value(&self, base: Value, k: u32, pos: Pos) -> Result<Value, EvalError> {
        if k == 0 {
            return Ok(Value::Num(Rat::one()));
        }
        if k == 1 {
            return Ok(base);
        }
        match base {
            Value::Num(r) => {
                let mut acc = Rat::one();
                for _ in 0..k {
                    acc *= &r;
                }
                Ok(Value::Num(acc))
            }
            Value::Class { space, expr } => match self.spaces.get(&space) {
                Some(SpaceModel::Ring(s)) => {
                    let reduced = s
                        .algebra()
                        .normal_form(&expr.pow(k))
                        .map_err(|e| err(pos, e.to_string()))?;
                    Ok(Value::Class {
                        space,
                        expr: reduced,
                    })
                }
                Some(SpaceModel::Trilinear(t)) => {
                    let degree = tri_degree(t, &expr, pos)?;
                    match (degree, k) {
                        (1, 2) => Ok(Value::Class {
                            space,
                            expr: expr.pow(2),
                        }),
                        (1, 3) => Ok(Value::Num(
                            t.triple(&expr, &expr, &expr, false)
                                .map_err(|e| err(pos, e.to_string()))?,
                        )),
                        _ => Err(err(
                            pos,
                            format!(
                                "exponent {k} exceeds the top degree for this class on '{space}'"
                            ),
                        )),
                    }
                }
                _ => Err(err(pos, format!("'{space}' does not support powers"))),
            },
            Value::Level(x) => {
                let mut acc = x.clone();
                for _ in 1..k {
                    acc = acc.mul(&x);
                }
                Ok(Value::Level(acc))
            }
            Value::PairVec { .. } => Err(err(
                pos,
                "cannot raise a pairing vector to a power; pair a row with a column",
            )),
        }
    }

    // ------------------------------------------------------------ equality

    fn eval_eq_expr(
        &self,
        context: Option<&str>,
        l: &SExpr,
        r: &SExpr,
    ) -> Result<(String, String, bool), EvalError> {
        let lv = self.eval_expr(context, l)?;
        let rv = self.eval_expr(context, r)?;
        let (computed, expected, pass) = self.compare(lv, rv, l.pos, r.pos)?;
        Ok((computed, expected, pass))
    }

    /// Compares two values; returns (printed left, printed right, equal).
    fn compare(
        &self,
        left: Value,
        right: Value,
        lpos: Pos,
        rpos: Pos,
    ) -> Result<(String, String, bool), EvalError> {
        use Value::*;
        match (left, right) {
            (Num(a), Num(b)) => {
                let pass = a == b;
                Ok((fmt_rat(&a), fmt_rat(&b), pass))
            }
            (Class { space, expr }, Num(n)) => {
                let (shown, pass) = self.class_against_number(&space, &expr, &n, lpos)?;
                Ok((shown, fmt_rat(&n), pass))
            }
            (Num(n), Class { space, expr }) => {
                let (shown, pass) = self.class_against_number(&space, &expr, &n, rpos)?;
                Ok((fmt_rat(&n), shown, pass))
            }
            (
                Class { space: s1, expr: e1 },
                Class { space: s2, expr: e2 },
            ) => {
                if s1 != s2 {
                    return Err(err(rpos, "cannot compare classes from different spaces"));
                }
                match self.spaces.get(&s1) {
                    Some(SpaceModel::Ring(s)) => {
                        let na = s
                            .algebra()
                            .normal_form(&e1)
                            .map_err(|e| err(lpos, e.to_string()))?;
                        let nb = s
                            .algebra()
                            .normal_form(&e2)
                            .map_err(|e| err(rpos, e.to_string()))?;
                        let pass = na == nb;
                        Ok((na.to_string(), nb.to_string(), pass))
                    }
                    Some(SpaceModel::Trilinear(t)) => {
                        let ca = tri_canonical(t, &e1, lpos)?;
                        let cb = tri_canonical(t, &e2, rpos)?;
                        let pass = ca == cb;
                        Ok((tri_canonical_str(t, &ca), tri_canonical_str(t, &cb), pass))
                    }
                    _ => Err(err(lpos, format!("'{s1}' does not support class equality"))),
                }
            }
            (Level(a), Num(n)) => {
                let value = self
                    .level_model()
                    .normalized_value(&a)
                    .map_err(|e| err(lpos, e.to_string()))?;
                let pass = value == n;
                Ok((fmt_rat(&value), fmt_rat(&n), pass))
            }
            (Num(n), Level(a)) => {
                let value = self
                    .level_model()
                    .normalized_value(&a)
                    .map_err(|e| err(rpos, e.to_string()))?;
                let pass = n == value;
                Ok((fmt_rat(&n), fmt_rat(&value), pass))
            }
            (Level(a), Level(b)) => {
                let pass = a == b;
                Ok((a.to_string(), b.to_string(), pass))
            }
            (
                PairVec { side: s1, coords: c1 },
                PairVec { side: s2, coords: c2 },
            ) => {
                if s1 != s2 {
                    return Err(err(
                        rpos,
                        format!("cannot compare a {s1} vector with a {s2} vector"),
                    ));
                }
                let pass = c1 == c2;
                Ok((coords_str(&c1), coords_str(&c2), pass))
            }
            (PairVec { coords, .. }, Num(n)) if n.is_zero() => {
                let pass = coords.iter().all(Zero::is_zero);
                Ok((coords_str(&coords), "0".to_owned(), pass))
            }
            (Num(n), PairVec { coords, .. }) if n.is_zero() => {
                let pass = coords.iter().all(Zero::is_zero);
                Ok(("0".to_owned(), coords_str(&coords), pass))
            }
            (a, b) => Err(err(
                rpos,
                format!("cannot compare {} with {}", a.kind(), b.kind()),
            )),
        }
    }

    /// A class compared against a rational: zero means "zero as a class",
    /// anything else means "integrates to this value".
    fn class_against_number(
        &self,
        space: &str,
        expr: &ClassExpr,
        n: &Rat,
        pos: Pos,
    ) -> Result<(String, bool), EvalError> {
        match self.spaces.get(space) {
            Some(SpaceModel::Ring(s)) => {
                if n.is_zero() {
                    let nf = s
                        .algebra()
                        .normal_form(expr)
                        .map_err(|e| err(pos, e.to_string()))?;
                    let pass = nf.is_zero();
                    Ok((nf.to_string(), pass))
                } else {
                    let value = s
                        .algebra()
                        .integrate(expr)
                        .map_err(|e| err(pos, e.to_string()))?;
                    let pass = value == *n;
                    Ok((fmt_rat(&value), pass))
                }
            }
            Some(SpaceModel::Trilinear(t)) => {
                if !n.is_zero() {
                    return Err(err(
                        pos,
                        format!(
                            "a class on '{space}' never equals a nonzero number; contract it to a number first"
                        ),
                    ));
                }
                let canonical = tri_canonical(t, expr, pos)?;
                let zero = match &canonical {
                    TriCanonical::Divisor(coords) => coords.iter().all(Zero::is_zero),
                    TriCanonical::Quadratic(terms) => terms.is_empty(),
                };
                Ok((tri_canonical_str(t, &canonical), zero))
            }
            _ => Err(err(pos, format!("'{space}' does not support this comparison"))),
        }
    }
}

// ------------------------------------------------------------ helpers

/// Canonical shape of a class on the trilinear model.
#[derive(Debug, Clone, PartialEq, Eq)]
enum TriCanonical {
    Divisor(Vec<Rat>),
    Quadratic(BTreeMap<(usize, usize), Rat>),
}

fn tri_degree(t: &TrilinearSpace, expr: &ClassExpr, pos: Pos) -> Result<u32, EvalError> {
    if t.divisor_coords(expr).is_ok() {
        return Ok(1);
    }
    if t.quadratic_terms(expr).is_ok() {
        return Ok(2);
    }
    Err(err(
        pos,
        "the class must be linear or quadratic in the divisor basis",
    ))
}

fn tri_canonical(
    t: &TrilinearSpace,
    expr: &ClassExpr,
    pos: Pos,
) -> Result<TriCanonical, EvalError> {
    if let Ok(coords) = t.divisor_coords(expr) {
        return Ok(TriCanonical::Divisor(coords));
    }
    match t.quadratic_terms(expr) {
        Ok(terms) => {
            let mut map: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
            for (coeff, i, j) in terms {
                let key = if i <= j { (i, j) } else { (j, i) };
                let entry = map.entry(key).or_insert_with(Rat::zero);
                *entry += coeff;
                if entry.is_zero() {
                    map.remove(&key);
                }
            }
            Ok(TriCanonical::Quadratic(map))
        }
        Err(_) => Err(err(
            pos,
            "the class must be linear or quadratic in the divisor basis",
        )),
    }
}

fn tri_canonical_str(t: &TrilinearSpace, canonical: &TriCanonical) -> String {
    match canonical {
        TriCanonical::Divisor(coords) => coords_str(coords),
        TriCanonical::Quadratic(terms) => {
            if terms.is_empty() {
                return "0".to_owned();
            }
            let names = t.basis_names();
            let parts: Vec<String> = terms
                .iter()
                .map(|((i, j), c)| format!("{}*{}*{}", fmt_rat(c), names[*i], names[*j]))
                .collect();
            parts.join(" + ")
        }
    }
}

fn neg_value(v: Value) -> Value {
    match v {
        Value::Num(r) => Value::Num(-r),
        Value::Class { space, expr } => Value::Class {
            space,
            expr: -&expr,
        },
        Value::Level(x) => Value::Level(x.neg()),
        Value::PairVec { side, coords } => Value::PairVec {
            side,
            coords: coords.iter().map(|c| -c).collect(),
        },
    }
}

/// Translates an expression into a class over a fixed generator set, with
/// no space semantics; used for ring definitions.
fn symbolic_class(expr: &SExpr, gens: &BTreeSet<String>) -> Result<ClassExpr, EvalError> {
    match &expr.node {
        Expr::Num(r) => Ok(ClassExpr::constant(r.clone())),
        Expr::Name(n) => {
            if gens.contains(n) {
                Ok(ClassExpr::gen(n))
            } else {
                Err(err(
                    expr.pos,
                    format!("unknown generator '{n}' in this ring definition"),
                ))
            }
        }
        Expr::Neg(inner) => Ok(-&symbolic_class(inner, gens)?),
        Expr::Add(l, r) => Ok(&symbolic_class(l, gens)? + &symbolic_class(r, gens)?),
        Expr::Sub(l, r) => Ok(&symbolic_class(l, gens)? - &symbolic_class(r, gens)?),
        Expr::Mul(l, r) => Ok(&symbolic_class(l, gens)? * &symbolic_class(r, gens)?),
        Expr::Pow(base, k) => Ok(symbolic_class(base, gens)?.pow(*k)),
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse;
    use super::*;

    fn run(text: &str) -> ScenarioReport {
        let ast = parse(text).expect("parses");
        evaluate("test.isl", &ast).expect("evaluates")
    }

    fn run_err(text: &str) -> EvalError {
        let ast = parse(text).expect("parses");
        evaluate("test.isl", &ast).expect_err("evaluation fails")
    }

    #[test]
    fn numeric_assertions_pass_and_fail() {
        let report = run("assert 1/24 == 1/24;\nassert 1/24 == 1/25;");
        assert_eq!(report.summary.passed, 1);
        assert_eq!(report.summary.failed, 1);
        let failing = &report.assertions[1];
        assert_eq!(failing.computed, "1/24");
        assert_eq!(failing.expected, "1/25");
        assert!(!failing.pass);
    }

    #[test]
    fn ring_context_assertions_integrate_and_reduce() {
        let report = run(
            "assert X1: (Z + L)*(Z + L) == 1/24;\n\
             assert A2: D2^3 == -11/12;\n\
             assert A2: L2*D2^2 + 120*L2^3 == 0;\n\
             assert A2: L2*D2^2 == -120*L2^3;",
        );
        assert_eq!(report.summary.passed, 4);
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn user_defined_rings_evaluate() {
        let report = run(
            "ring W { gens A:1, B:1; rels A^2, B^2 + A*B; top 2; integral A*B = 1/24; }\n\
             assert W: (A + B)^2 == 1/24;",
        );
        assert_eq!(report.summary.passed, 1);
    }

    #[test]
    fn built_in_spaces_cannot_be_shadowed() {
        let e = run_err("ring A2 { gens L:1; top 1; integral L = 1; }");
        assert!(e.message.contains("already defined"), "{e}");
    }

    #[test]
    fn pairing_space_vectors_pair_and_compare() {
        let report = run(
            "assert A3_H4: SA*L2 == 1/1152;\n\
             class R on A3_H4 = 72*L2 - 12*LM + 3*M2 - B2;\n\
             assert A3_H4: SD*R == 0;\n\
             assert A3_H4: SD - 2*SF + C4 - (1/4)*K31 == 0;\n\
             assert A3_H4: FS4 == SF;",
        );
        assert_eq!(report.summary.passed, 4);
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn level_ring_elements_compare_by_normalized_value() {
        let report = run(
            "assert SP_level: L*D == -1/96;\n\
             assert SP_level: D*D == -1/4;\n\
             assert SP_level: B2 == -1/8;",
        );
        assert_eq!(report.summary.passed, 3);
    }

    #[test]
    fn trilinear_products_contract() {
        let report = run(
            "assert Ytilde: Dres*Dres*Dres == 31/4;\n\
             assert Ytilde: (1/12)*(Dres*Dres*Dres) == 31/48;\n\
             assert Ytilde: E*Dminus == 1/2;\n\
             assert Ytilde: P*Z1*Z2 == 0;\n\
             assert Ytilde: SDprime == 2*L + 3*Z1 + 3*Z2 - Dt;",
        );
        assert_eq!(report.summary.passed, 5);
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn cone_assertions_work_end_to_end() {
        let report = run(
            "cone eff = cone(SA, SF, SD, C4, K31) under A3_H4;\n\
             assert extremal SA in eff;\n\
             assert not simplicial eff;\n\
             assert member SA in eff;\n\
             assert not member SA in cone(C4, K31);\n\
             assert member FS1 in cone(C4, K31);\n\
             assert member 12*C4 + 3*K31 in cone(C4, K31);",
        );
        assert_eq!(report.summary.passed, 6);
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn dual_cone_equality_uses_canonical_rays() {
        let report = run(
            "cone quadrant = cone(L2, LM) under A3_H4;\n\
             assert dual(dual(quadrant)) == quadrant;",
        );
        assert_eq!(report.summary.passed, 1);
    }

    #[test]
    fn forward_references_are_errors_with_positions() {
        let e = run_err("assert A3_H4: R == 0;\nclass R on A3_H4 = L2;");
        assert_eq!((e.line, e.col), (1, 15));
        assert!(e.message.contains("unknown class 'R'"), "{e}");
    }

    #[test]
    fn missing_space_context_is_reported() {
        let e = run_err("assert L2 == 0;");
        assert!(e.message.contains("needs a space context"), "{e}");
    }

    #[test]
    fn mixed_side_products_are_rejected() {
        let e = run_err("assert A3_H4: SA*SD == 0;");
        assert!(e.message.contains("row-side"), "{e}");
    }

    #[test]
    fn level_parameters_must_cancel() {
        let e = run_err("assert SP_level: S*N == 1;");
        assert!(e.message.contains("cancel"), "{e}");
        assert_eq!((e.line, e.col), (1, 18));
    }

    #[test]
    fn scaled_vectors_compare_exactly() {
        let report = run(
            "class HALF on A3_H4 = (1/2)*SF;\n\
             assert A3_H4: HALF + HALF == SF;\n\
             assert A3_H4: 2*HALF - SF == 0;",
        );
        assert_eq!(report.summary.passed, 2);
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn report_records_carry_positions_and_descriptions() {
        let report = run("assert A2: L2^3 == 1/2880;");
        let record = &report.assertions[0];
        assert_eq!(record.file, "test.isl");
        assert_eq!((record.line, record.col), (1, 1));
        assert_eq!(record.desc, "A2: L2^3 == 1/2880");
        assert_eq!(record.computed, "1/2880");
        assert!(record.pass);
    }
}
