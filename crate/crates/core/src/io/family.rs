use super::InputError;
use crate::graph::Graph;

fn arity(family: &str) -> Option<usize> {
    Some(match family {
        "cycle" | "path" | "complete" | "empty" | "prism" => 1,
        "bipartite" => 2,
        _ => return None,
    })
}

/// Builds a parameterized family: `cycle k`, `path k`, `complete k`,
/// `empty k`, `bipartite a b`, `prism k` (`C_k x K2`).
pub fn build_family(family: &str, params: &[usize]) -> Result<Graph, InputError> {
    let want = arity(family).ok_or_else(|| InputError::Family(format!("unknown family '{family}'")))?;
    if params.len() != want {
        return Err(InputError::Family(format!("{family} takes {want} parameter(s), got {}", params.len())));
    }
    let fam = |e: crate::graph::GraphError| InputError::Family(e.to_string());
    match family {
        "cycle" => Graph::cycle(params[0]).map_err(fam),
        "path" => Graph::path(params[0]).map_err(fam),
        "complete" => Graph::complete(params[0]).map_err(fam),
        "empty" => Graph::edgeless(params[0]).map_err(fam),
        "bipartite" => Graph::complete_bipartite(params[0], params[1]).map_err(fam),
        "prism" => Ok(Graph::cycle(params[0]).map_err(fam)?.cartesian_product(&Graph::complete(2).unwrap())),
        _ => unreachable!(),
    }
}

/// Parses a token sequence such as `product cycle 4 path 3` or
/// `join empty 3 empty 3`. `product` and `join` take two nested specs.
pub fn parse_family_spec<S: AsRef<str>>(tokens: &[S]) -> Result<Graph, InputError> {
    let mut pos = 0;
    let g = parse_one(tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(InputError::Family(format!("unexpected trailing '{}'", tokens[pos].as_ref())));
    }
    Ok(g)
}

fn parse_one<S: AsRef<str>>(tokens: &[S], pos: &mut usize) -> Result<Graph, InputError> {
    let family = tokens
        .get(*pos)
        .map(|t| t.as_ref())
        .ok_or_else(|| InputError::Family("missing family name".into()))?;
    *pos += 1;
    match family {
        "product" | "join" => {
            let a = parse_one(tokens, pos)?;
            let b = parse_one(tokens, pos)?;
            Ok(if family == "product" { a.cartesian_product(&b) } else { a.join(&b) })
        }
        _ => {
            let want = arity(family).ok_or_else(|| InputError::Family(format!("unknown family '{family}'")))?;
            let mut params = Vec::with_capacity(want);
            for _ in 0..want {
                let tok = tokens
                    .get(*pos)
                    .map(|t| t.as_ref())
                    .ok_or_else(|| InputError::Family(format!("{family} takes {want} parameter(s)")))?;
                let p = tok
                    .parse()
                    .map_err(|_| InputError::Family(format!("invalid parameter '{tok}' for {family}")))?;
                params.push(p);
                *pos += 1;
            }
            build_family(family, &params)
        }
    }
}
