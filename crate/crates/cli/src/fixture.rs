use treepack::graph::{build_b, complete, complete_bipartite, fixture_h1, fixture_h2, petersen};
use treepack::Graph;

/// Resolves `h1`, `h2`, `petersen`, `kN`, `kAxB` and `bN,S,K`.
pub fn fixture(name: &str) -> Option<Graph> {
    let name = name.trim().to_ascii_lowercase();
    match name.as_str() {
        "h1" => return Some(fixture_h1()),
        "h2" => return Some(fixture_h2()),
        "petersen" => return Some(petersen()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('k') {
        if let Some((a, b)) = rest.split_once('x') {
            return complete_bipartite(a.parse().ok()?, b.parse().ok()?).ok();
        }
        return complete(rest.parse().ok()?).ok();
    }
    if let Some(rest) = name.strip_prefix('b') {
        let parts: Vec<usize> = rest.split(',').map(|p| p.trim().parse().ok()).collect::<Option<_>>()?;
        if let [n, s, k] = parts[..] {
            return build_b(n, s, k).ok();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(fixture("h1").unwrap().size(), 28);
        assert_eq!(fixture("K5").unwrap().size(), 10);
        assert_eq!(fixture("k5x5").unwrap().size(), 25);
        assert_eq!(fixture("b11,5,1").unwrap().size(), 26);
        assert_eq!(fixture("petersen").unwrap().order(), 10);
        assert!(fixture("k0").is_none());
        assert!(fixture("b3,5,1").is_none());
        assert!(fixture("cube").is_none());
    }
}
