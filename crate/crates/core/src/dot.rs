//! DOT export of underlying preorders. Preorders render poorly as raw
//! digraphs, so the export first quotients by mutual comparability and then
//! draws the Hasse diagram (cover relation) of the quotient poset.

use crate::qord::QOrderedSet;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Iso classes of the underlying preorder, each sorted, in order of their
/// smallest member.
pub fn iso_classes(x: &QOrderedSet) -> Vec<Vec<usize>> {
    let n = x.len();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&j| x.underlying_iso(i, j)).collect();
        for &j in &class {
            seen[j] = true;
        }
        classes.push(class);
    }
    classes
}

/// Cover pairs `(i, j)` between class indices: `i < j` strictly with nothing
/// in between.
pub fn cover_relation(x: &QOrderedSet, classes: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| {
        x.underlying_leq(classes[a][0], classes[b][0])
            && !x.underlying_leq(classes[b][0], classes[a][0])
    };
    let mut covers = Vec::new();
    for a in 0..classes.len() {
        for b in 0..classes.len() {
            if lt(a, b) && !(0..classes.len()).any(|c| lt(a, c) && lt(c, b)) {
                covers.push((a, b));
            }
        }
    }
    covers
}

/// The Hasse diagram of the quotient poset as a DOT digraph. Node labels
/// join the class members and carry the shared membership degree.
pub fn hasse_dot(x: &QOrderedSet, title: &str) -> String {
    let q = x.quantale();
    let classes = iso_classes(x);
    let covers = cover_relation(x, &classes);
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", escape(title)));
    out.push_str("  rankdir=BT;\n  node [shape=box];\n");
    for (c, members) in classes.iter().enumerate() {
        let names: Vec<&str> = members.iter().map(|&i| x.label(i)).collect();
        let deg = q.label(x.membership(members[0]));
        out.push_str(&format!(
            "  n{} [label=\"{} [{}]\"];\n",
            c,
            escape(&names.join(",")),
            escape(deg)
        ));
    }
    for (a, b) in covers {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_with_degree_classes() {
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 2]);
        let classes = iso_classes(&x);
        assert_eq!(classes.len(), 3);
        let covers = cover_relation(&x, &classes);
        assert_eq!(covers.len(), 1, "only bot < e survives");
        let dot = hasse_dot(&x, "t");
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("n0 -> n1"));
    }

    #[test]
    fn indiscrete_part_collapses_to_one_node() {
        use crate::qrel::QSubset;
        use std::sync::Arc;
        let q = Arc::new(crate::quantale::bool2());
        let carrier = QSubset::new(
            q,
            vec!["x".into(), "y".into(), "c".into()],
            vec![0, 0, 1],
        )
        .unwrap();
        let x = crate::qord::QOrderedSet::discrete(carrier);
        let classes = iso_classes(&x);
        assert_eq!(classes, vec![vec![0, 1], vec![2]]);
        assert!(cover_relation(&x, &classes).is_empty());
    }
}
