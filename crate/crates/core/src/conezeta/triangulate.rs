use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{
    determinant, lp_feasible, pivot_columns, rank, solve_exact, IntVector, LinearSystem, RatMatrix, RatVector,
    Rational, Relation,
};

/// True when some nontrivial nonnegative combination of the generators vanishes.
fn has_lineality(gens: &[IntVector]) -> bool {
    let n = gens.len();
    let d = gens[0].len();
    let mut sys = LinearSystem::nonnegative(n);
    sys.add_constraint(vec![Rational::one(); n], Relation::Eq, Rational::one());
    for k in 0..d {
        sys.add_constraint(
            gens.iter().map(|g| Rational::from_integer(g[k].clone())).collect(),
            Relation::Eq,
            Rational::zero(),
        );
    }
    lp_feasible(&sys)
}

/// Sign of `det [F; x]` restricted to `chart` coordinates.
fn side(facet: &[&IntVector], x: &IntVector, chart: &[usize]) -> i8 {
    let rows: Vec<RatVector> = facet
        .iter()
        .copied()
        .chain(std::iter::once(x))
        .map(|v| RatVector::new(chart.iter().map(|&c| Rational::from_integer(v[c].clone())).collect()))
        .collect();
    let det = determinant(&RatMatrix::new(rows));
    if det.is_positive() {
        1
    } else if det.is_negative() {
        -1
    } else {
        0
    }
}

fn chart_of(vectors: &[&IntVector]) -> Vec<usize> {
    pivot_columns(&RatMatrix::new(vectors.iter().map(|v| v.to_rational()).collect()))
}

/// Coefficients of `x` in the basis `simplex` (which spans `x`).
fn coefficients(generators: &[IntVector], simplex: &[usize], x: &IntVector) -> Vec<Rational> {
    let cols: Vec<RatVector> = simplex.iter().map(|&i| generators[i].to_rational()).collect();
    let a = RatMatrix::from_columns(&cols, x.len());
    solve_exact(&a, &x.to_rational())
        .expect("simplex generators are independent")
        .expect("point lies in the span")
        .entries()
        .to_vec()
}

/// Subdivides every simplex whose cone contains generator `g`, replacing it
/// by the pieces joining `g` to the facets it does not lie on. Returns false
/// (and changes nothing) when `g` lies outside the current cone.
fn stellar_insert(generators: &[IntVector], simplices: &mut Vec<Vec<usize>>, g: usize) -> bool {
    let mut hit = false;
    let mut out = Vec::with_capacity(simplices.len());
    for s in simplices.iter() {
        let a = coefficients(generators, s, &generators[g]);
        if a.iter().any(Signed::is_negative) {
            out.push(s.clone());
            continue;
        }
        hit = true;
        for (i, ai) in a.iter().enumerate() {
            if ai.is_positive() {
                let mut new = s.clone();
                new[i] = g;
                out.push(new);
            }
        }
    }
    if hit {
        *simplices = out;
    }
    hit
}

/// Placing triangulation of the cone spanned by `generators`.
///
/// Generators are inserted in lexicographic order. A generator outside the
/// current span cones over every simplex; one inside the current cone
/// subdivides the simplices containing it; any other is joined to every
/// boundary facet it sees strictly. Every generator ends up as a ray. Returns subsets of indices into
/// `generators`, each ascending. The zero cone yields one empty subset.
pub fn triangulate(generators: &[IntVector]) -> Result<Vec<Vec<usize>>> {
    if generators.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    if generators.iter().any(IntVector::is_zero) {
        return Err(Error::ZeroVector);
    }
    if has_lineality(generators) {
        return Err(Error::NotPointed);
    }
    let mut order: Vec<usize> = (0..generators.len()).collect();
    order.sort_by(|&a, &b| generators[a].cmp(&generators[b]).then(a.cmp(&b)));
    order.dedup_by(|a, b| generators[*a] == generators[*b]);

    let mut simplices: Vec<Vec<usize>> = vec![vec![order[0]]];
    let mut span: Vec<RatVector> = vec![generators[order[0]].to_rational()];
    for &g in &order[1..] {
        let mut extended = span.clone();
        extended.push(generators[g].to_rational());
        if rank(&RatMatrix::new(extended.clone())) > span.len() {
            span = extended;
            for s in &mut simplices {
                s.push(g);
            }
            continue;
        }
        if stellar_insert(generators, &mut simplices, g) {
            continue;
        }

        let mut facet_count: HashMap<Vec<usize>, usize> = HashMap::new();
        for s in &simplices {
            for i in 0..s.len() {
                let mut f: Vec<usize> = s.iter().copied().filter(|&x| x != s[i]).collect();
                f.sort_unstable();
                *facet_count.entry(f).or_default() += 1;
            }
        }
        let mut added = Vec::new();
        for s in &simplices {
            let chart = chart_of(&s.iter().map(|&i| &generators[i]).collect::<Vec<_>>());
            for i in 0..s.len() {
                let mut f: Vec<usize> = s.iter().copied().filter(|&x| x != s[i]).collect();
                f.sort_unstable();
                if facet_count[&f] != 1 {
                    continue;
                }
                let fv: Vec<&IntVector> = f.iter().map(|&j| &generators[j]).collect();
                let sg = side(&fv, &generators[g], &chart);
                let so = side(&fv, &generators[s[i]], &chart);
                if sg != 0 && sg == -so {
                    let mut new = f.clone();
                    new.push(g);
                    added.push(new);
                }
            }
        }
        simplices.extend(added);
    }
    for s in &mut simplices {
        s.sort_unstable();
    }
    Ok(simplices)
}
