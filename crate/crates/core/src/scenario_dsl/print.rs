//! Canonical printer for scenario syntax trees. Reparsing printed output
//! yields a tree equal to the original (positions aside), which the test
//! suite checks for every bundled scenario.

use crate::algebra_core::rat::fmt_rat;

use super::ast::{
    Assertion, BoolExpr, ClassDef, ConeDef, ConeExpr, Expr, RingDef, SConeExpr, SExpr,
    ScenarioAst, Statement,
};

/// Prints a whole scenario, one statement per line, trailing newline.
pub fn print_scenario(ast: &ScenarioAst) -> String {
    let mut out = String::new();
    for statement in &ast.statements {
        out.push_str(&statement_str(statement));
        out.push('\n');
    }
    out
}

pub fn statement_str(statement: &Statement) -> String {
    match statement {
        Statement::Ring(r) => ring_str(r),
        Statement::Class(c) => class_str(c),
        Statement::Cone(c) => cone_def_str(c),
        Statement::Assert(a) => assertion_str(a),
    }
}

fn ring_str(r: &RingDef) -> String {
    let gens: Vec<String> = r
        .gens
        .iter()
        .map(|(name, degree)| format!("{name}:{degree}"))
        .collect();
    let mut body = format!("gens {};", gens.join(", "));
    if !r.rels.is_empty() {
        let rels: Vec<String> = r.rels.iter().map(|e| expr_str(e, 1)).collect();
        body.push_str(&format!(" rels {};", rels.join(", ")));
    }
    body.push_str(&format!(" top {};", r.top));
    body.push_str(&format!(
        " integral {} = {};",
        expr_str(&r.integral_monomial, 1),
        fmt_rat(&r.integral_value)
    ));
    if let Some(scale) = &r.scale {
        body.push_str(&format!(" scale {};", fmt_rat(scale)));
    }
    format!("ring {} {{ {body} }}", r.name)
}

fn class_str(c: &ClassDef) -> String {
    format!(
        "class {} on {} = {};",
        c.name,
        c.space.node,
        expr_str(&c.expr, 1)
    )
}

fn cone_def_str(c: &ConeDef) -> String {
    let members: Vec<&str> = c.members.iter().map(|m| m.node.as_str()).collect();
    let mut out = format!("cone {} = cone({})", c.name, members.join(", "));
    if let Some(space) = &c.under {
        out.push_str(&format!(" under {}", space.node));
    }
    out.push(';');
    out
}

fn assertion_str(a: &Assertion) -> String {
    let space = a.space.as_ref().map(|s| s.node.as_str());
    format!("assert {};", claim_str(space, &a.claim))
}

/// The printed claim, with its optional space label.
pub fn claim_str(space: Option<&str>, claim: &BoolExpr) -> String {
    let body = match claim {
        BoolExpr::EqExpr(l, r) => format!("{} == {}", expr_str(l, 1), expr_str(r, 1)),
        BoolExpr::EqCone(l, r) => format!("{} == {}", cone_str(l), cone_str(r)),
        BoolExpr::Member {
            negated,
            element,
            cone,
        } => format!(
            "{}member {} in {}",
            if *negated { "not " } else { "" },
            expr_str(element, 1),
            cone_str(cone)
        ),
        BoolExpr::Extremal {
            negated,
            element,
            cone,
        } => format!(
            "{}extremal {} in {}",
            if *negated { "not " } else { "" },
            expr_str(element, 1),
            cone_str(cone)
        ),
        BoolExpr::Simplicial { negated, cone } => format!(
            "{}simplicial {}",
            if *negated { "not " } else { "" },
            cone_str(cone)
        ),
    };
    match space {
        Some(s) => format!("{s}: {body}"),
        None => body,
    }
}

pub fn cone_str(cone: &SConeExpr) -> String {
    match &cone.node {
        ConeExpr::Named(name) => name.node.clone(),
        ConeExpr::Literal { members, under } => {
            let names: Vec<&str> = members.iter().map(|m| m.node.as_str()).collect();
            let mut out = format!("cone({})", names.join(", "));
            if let Some(space) = under {
                out.push_str(&format!(" under {}", space.node));
            }
            out
        }
        ConeExpr::Dual(inner) => format!("dual({})", cone_str(inner)),
    }
}

/// Precedence levels: additive 1, multiplicative 2, unary minus 3,
/// power 4, atoms 5. A node whose precedence is below the context is
/// parenthesized.
pub fn expr_str(expr: &SExpr, context: u8) -> String {
    let (text, prec) = match &expr.node {
        Expr::Num(r) => (fmt_rat(r), 5),
        Expr::Name(n) => (n.clone(), 5),
        Expr::Add(l, r) => (format!("{} + {}", expr_str(l, 1), expr_str(r, 2)), 1),
        Expr::Sub(l, r) => (format!("{} - {}", expr_str(l, 1), expr_str(r, 2)), 1),
        Expr::Mul(l, r) => (format!("{}*{}", expr_str(l, 2), expr_str(r, 3)), 2),
        Expr::Neg(inner) => (format!("-{}", expr_str(inner, 3)), 3),
        Expr::Pow(base, e) => (format!("{}^{}", expr_str(base, 5), e), 4),
    };
    if prec < context {
        format!("({text})")
    } else {
        text
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse;
    use super::*;

    fn round_trip(text: &str) {
        let ast = parse(text).expect("parses");
        let printed = print_scenario(&ast);
        let reparsed = parse(&printed).expect("printed output parses");
        assert_eq!(ast, reparsed, "round trip through printer for {text:?}");
    }

    #[test]
    fn statements_round_trip() {
        round_trip("ring W { gens L:1, Z:1; rels L^2, Z^2 + L*Z; top 2; integral L*Z = 1/24; }");
        round_trip("ring V { gens A:1; top 1; integral A = -1/2; scale 1/2; }");
        round_trip("class R on A3_H4 = 72*L2 - 12*LM + 3*M2 - B2;");
        round_trip("cone eff = cone(SA, SF) under A3_H4;");
        round_trip("assert A2: D2^3 == -11/12;");
        round_trip("assert dual(cone(SA, SF)) == cone(L2, LM);");
        round_trip("assert not member R in cone(L2, M2);");
        round_trip("assert 1/24 == 1/25;");
    }

    #[test]
    fn parenthesization_is_faithful() {
        round_trip("assert X1: (Z + L)*(Z + L) == 1/24;");
        round_trip("assert X1: Z + L*Z + -(L + Z)^2 == 0;");
        round_trip("assert A2: L2 - (D2 - L2) - D2 == -2*(D2 - L2);");
        round_trip("assert A2: (1/12)*(D2*D2*D2) == -11/144;");
    }

    #[test]
    fn printed_form_is_canonical() {
        let ast = parse("assert   X1 :  ( Z + L ) * ( Z + L )==1/24 ;").unwrap();
        assert_eq!(
            print_scenario(&ast),
            "assert X1: (Z + L)*(Z + L) == 1/24;\n"
        );
    }
}
