//! Built-in manifolds.

use super::manifold::{parse_manifold, ManifoldFile};

pub const TORUS4: &str = "\
# Complex torus of real dimension 4: every invariant form is closed.
manifold torus4 ncomplex 2
d phi1 = 0
d phi2 = 0
metric identity
";

pub const KODAIRA_THURSTON: &str = "\
# Kodaira-Thurston nilmanifold with a non-integrable almost-complex structure.
manifold kodaira_thurston ncomplex 2
d phi1 = 0
d phi2 = (1/(2i))*w[1,2] + (1/(2i))*w[1,-2] - (1/(2i))*w[2,-1] + (1/(2i))*w[-1,-2]
metric identity
";

pub const FILIFORM4: &str = "\
# Four-dimensional filiform nilmanifold; no compatible symplectic structure.
manifold filiform4 ncomplex 2
d phi1 = 0
d phi2 = (1/(2i))*w[1,2] + (1/(2i))*w[1,-2] - (1/(2i))*w[2,-1] - i*w[1,-1] + (1/(2i))*w[-1,-2]
metric identity
";

pub const IWASAWA6: &str = "\
# Iwasawa manifold with a non-integrable almost-complex structure,
# phi1 = e1 + i e6, phi2 = e2 + i e5, phi3 = e3 + i e4.
manifold iwasawa6 ncomplex 3
d phi1 = -1/4*w[1,3] - i/4*w[2,3] + 1/4*w[1,-3] + 1/4*w[3,-1] - i/4*w[2,-3] + i/4*w[3,-2] + 1/4*w[-1,-3] - i/4*w[-2,-3]
d phi2 = -i/4*w[1,3] + 1/4*w[2,3] - i/4*w[1,-3] + i/4*w[3,-1] - 1/4*w[2,-3] - 1/4*w[3,-2] - i/4*w[-1,-3] - 1/4*w[-2,-3]
d phi3 = 0
metric identity
";

/// Names and sources of the built-in manifolds.
pub const CATALOG: [(&str, &str); 4] =
  [("torus4", TORUS4), ("kodaira_thurston", KODAIRA_THURSTON), ("filiform4", FILIFORM4), ("iwasawa6", IWASAWA6)];

pub fn catalog_names() -> Vec<&'static str> {
  CATALOG.iter().map(|(n, _)| *n).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown manifold '{name}'; known: {}", catalog_names().join(", "))]
pub struct UnknownManifold {
  pub name: String,
}

pub fn catalog_source(name: &str) -> Result<&'static str, UnknownManifold> {
  CATALOG.iter().find(|(n, _)| *n == name).map(|(_, s)| *s).ok_or_else(|| UnknownManifold { name: name.to_string() })
}

/// The parsed and validated built-in manifold.
pub fn catalog(name: &str) -> Result<ManifoldFile, UnknownManifold> {
  Ok(parse_manifold(catalog_source(name)?).expect("catalog entries are valid"))
}
