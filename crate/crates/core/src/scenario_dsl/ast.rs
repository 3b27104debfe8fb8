//! Abstract syntax for the scenario language. Every node carries the
//! 1-based source position where it starts; equality between syntax trees
//! deliberately ignores positions so a reprinted and reparsed scenario
//! compares equal to the original.

use crate::algebra_core::rat::Rat;

/// A 1-based line/column source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {} column {}", self.line, self.col)
    }
}

/// A node annotated with its starting position. Equality compares the node
/// only.
#[derive(Debug, Clone)]
pub struct Spanned<T> {
    pub node: T,
    pub pos: Pos,
}

impl<T> Spanned<T> {
    pub fn new(node: T, pos: Pos) -> Spanned<T> {
        Spanned { node, pos }
    }
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl<T: Eq> Eq for Spanned<T> {}

pub type SExpr = Spanned<Expr>;
pub type SName = Spanned<String>;
pub type SConeExpr = Spanned<ConeExpr>;

/// A rational-coefficient polynomial expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// A nonnegative rational literal (`3` or `1/24`); signs are `Neg`
    /// nodes.
    Num(Rat),
    Name(String),
    Neg(Box<SExpr>),
    Add(Box<SExpr>, Box<SExpr>),
    Sub(Box<SExpr>, Box<SExpr>),
    Mul(Box<SExpr>, Box<SExpr>),
    Pow(Box<SExpr>, u32),
}

/// A cone-valued expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeExpr {
    /// A previously defined cone, by name.
    Named(SName),
    /// `cone(a, b, c)` with an optional `under SPACE`; the space defaults
    /// to the pairing space `A3_H4`.
    Literal {
        members: Vec<SName>,
        under: Option<SName>,
    },
    /// `dual(conexpr)` under the ambient pairing.
    Dual(Box<SConeExpr>),
}

/// One assertable claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoolExpr {
    EqExpr(SExpr, SExpr),
    EqCone(SConeExpr, SConeExpr),
    Member {
        negated: bool,
        element: SExpr,
        cone: SConeExpr,
    },
    Extremal {
        negated: bool,
        element: SExpr,
        cone: SConeExpr,
    },
    Simplicial {
        negated: bool,
        cone: SConeExpr,
    },
}

/// `ring NAME { gens …; rels …; top N; integral M = r; scale r; }`
#[derive(Debug, Clone)]
pub struct RingDef {
    pub name: String,
    pub gens: Vec<(String, u32)>,
    pub rels: Vec<SExpr>,
    pub top: u32,
    pub integral_monomial: SExpr,
    pub integral_value: Rat,
    pub scale: Option<Rat>,
    pub pos: Pos,
}

impl PartialEq for RingDef {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.gens == other.gens
            && self.rels == other.rels
            && self.top == other.top
            && self.integral_monomial == other.integral_monomial
            && self.integral_value == other.integral_value
            && self.scale == other.scale
    }
}

impl Eq for RingDef {}

/// `class NAME on SPACE = expr;`
#[derive(Debug, Clone)]
pub struct ClassDef {
    pub name: String,
    pub space: SName,
    pub expr: SExpr,
    pub pos: Pos,
}

impl PartialEq for ClassDef {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.space == other.space && self.expr == other.expr
    }
}

impl Eq for ClassDef {}

/// `cone NAME = cone(a, b) under SPACE;`
#[derive(Debug, Clone)]
pub struct ConeDef {
    pub name: String,
    pub members: Vec<SName>,
    pub under: Option<SName>,
    pub pos: Pos,
}

impl PartialEq for ConeDef {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.members == other.members && self.under == other.under
    }
}

impl Eq for ConeDef {}

/// `assert SPACE: claim;` — the optional space name sets the context in
/// which class names inside the claim resolve.
#[derive(Debug, Clone)]
pub struct Assertion {
    pub space: Option<SName>,
    pub claim: BoolExpr,
    pub pos: Pos,
}

impl PartialEq for Assertion {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.claim == other.claim
    }
}

impl Eq for Assertion {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Ring(RingDef),
    Class(ClassDef),
    Cone(ConeDef),
    Assert(Assertion),
}

impl Statement {
    pub fn pos(&self) -> Pos {
        match self {
            Statement::Ring(s) => s.pos,
            Statement::Class(s) => s.pos,
            Statement::Cone(s) => s.pos,
            Statement::Assert(s) => s.pos,
        }
    }
}

/// A parsed scenario: an ordered list of statements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScenarioAst {
    pub statements: Vec<Statement>,
}
