//! Arrangement representation, validation, the `.arr` text format, cone /
//! decone coordinate changes, the builtin example corpus, and generic
//! slicing.
//!
//! Conventions. Every linear form stores `dim + 1` rational coefficients:
//!
//! * projective: homogeneous coordinates `x_0 .. x_n` of `P^n`;
//! * central: homogeneous coordinates `x_0 .. x_n` of `C^{n+1}` (the cone
//!   over a projective arrangement of the same `dim`);
//! * affine: `n` coordinate coefficients followed by the constant term.
//!
//! Hyperplane indices are 1-based and follow input order; every downstream
//! report refers to these indices.

use exact::{format_rational, parse_rational, QMatrix, Rat};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Projective,
    Affine,
    Central,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Projective => "projective",
            Kind::Affine => "affine",
            Kind::Central => "central",
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One hyperplane, as the coefficient vector of its defining linear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<Rat>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        LinearForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        LinearForm {
            coeffs: coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn proportional_to(&self, other: &LinearForm) -> bool {
        let n = self.coeffs.len();
        for i in 0..n {
            for j in i + 1..n {
                if &self.coeffs[i] * &other.coeffs[j] != &self.coeffs[j] * &other.coeffs[i] {
                    return false;
                }
            }
        }
        true
    }
}

/// A finite arrangement of distinct hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    kind: Kind,
    dim: usize,
    forms: Vec<LinearForm>,
    labels: Vec<String>,
}

impl Arrangement {
    /// Validate and build an arrangement. Rejects the zero form,
    /// proportional pairs, ragged coefficient rows, and (for affine input)
    /// forms with zero homogeneous part.
    pub fn new(kind: Kind, dim: usize, forms: Vec<LinearForm>) -> Result<Self> {
        let labels = (1..=forms.len()).map(|i| format!("H{i}")).collect();
        Arrangement::with_labels(kind, dim, forms, labels)
    }

    pub fn with_labels(
        kind: Kind,
        dim: usize,
        forms: Vec<LinearForm>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::validation("arrangement needs at least one hyperplane"));
        }
        if labels.len() != forms.len() {
            return Err(Error::validation("one label per hyperplane"));
        }
        let width = dim + 1;
        for (i, f) in forms.iter().enumerate() {
            if f.coeffs.len() != width {
                return Err(Error::validation(format!(
                    "form {} has {} coefficients, expected {}",
                    i + 1,
                    f.coeffs.len(),
                    width
                )));
            }
            if f.is_zero() {
                return Err(Error::validation(format!("zero form {}", i + 1)));
            }
            if kind == Kind::Affine && f.coeffs[..dim].iter().all(|c| c.is_zero()) {
                return Err(Error::validation(format!(
                    "form {} has zero homogeneous part",
                    i + 1
                )));
            }
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                if forms[i].proportional_to(&forms[j]) {
                    return Err(Error::validation(format!(
                        "proportional forms {},{}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Arrangement {
            kind,
            dim,
            forms,
            labels,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Ambient dimension `n` (projective dimension for projective and
    /// central arrangements).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of hyperplanes.
    pub fn size(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    /// 1-based access.
    pub fn form(&self, h: usize) -> &LinearForm {
        &self.forms[h - 1]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of coordinates a point of the ambient space has: `n+1` for
    /// projective/central, `n` for affine.
    pub fn coordinate_count(&self) -> usize {
        match self.kind {
            Kind::Projective | Kind::Central => self.dim + 1,
            Kind::Affine => self.dim,
        }
    }

    /// Parse the `.arr` text format.
    ///
    /// Line 1 is `<kind> <n> <m>`, followed by `m` coefficient rows of
    /// whitespace-separated rationals (`n+1` per row). Lines starting with
    /// `#` and blank lines are skipped. Errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            rows.push((idx + 1, trimmed.split_whitespace().collect()));
        }
        let Some((header_line, header)) = rows.first() else {
            return Err(Error::Parse {
                line: 1,
                msg: "empty input".into(),
            });
        };
        let parse_err = |line: usize, msg: String| Error::Parse { line, msg };
        if header.len() != 3 {
            return Err(parse_err(
                *header_line,
                "header must be '<kind> <n> <m>'".into(),
            ));
        }
        let kind = match header[0] {
            "projective" => Kind::Projective,
            "affine" => Kind::Affine,
            "central" => Kind::Central,
            other => {
                return Err(parse_err(*header_line, format!("unknown kind '{other}'")));
            }
        };
        let dim: usize = header[1]
            .parse()
            .map_err(|_| parse_err(*header_line, format!("bad dimension '{}'", header[1])))?;
        let m: usize = header[2]
            .parse()
            .map_err(|_| parse_err(*header_line, format!("bad count '{}'", header[2])))?;
        let body = &rows[1..];
        if body.len() != m {
            return Err(parse_err(
                *header_line,
                format!("header announces {m} forms, file has {}", body.len()),
            ));
        }
        let width = dim + 1;
        let mut forms = Vec::with_capacity(m);
        let mut line_of_form = Vec::with_capacity(m);
        for (line, tokens) in body {
            if tokens.len() != width {
                return Err(parse_err(
                    *line,
                    format!("expected {width} coefficients, found {}", tokens.len()),
                ));
            }
            let mut coeffs = Vec::with_capacity(width);
            for t in tokens {
                coeffs.push(
                    parse_rational(t).map_err(|e| parse_err(*line, e.to_string()))?,
                );
            }
            forms.push(LinearForm::new(coeffs));
            line_of_form.push(*line);
        }
        Arrangement::new(kind, dim, forms).map_err(|e| match e {
            // attach the offending line to validation failures
            Error::Validation(msg) => {
                let line = msg
                    .split(|c: char| !c.is_ascii_digit())
                    .find(|s| !s.is_empty())
                    .and_then(|s| s.parse::<usize>().ok())
                    .and_then(|i| line_of_form.get(i - 1).copied())
                    .unwrap_or(*header_line);
                Error::Parse { line, msg }
            }
            other => other,
        })
    }

    /// Serialize back to the `.arr` format.
    pub fn to_arr(&self) -> String {
        let mut out = format!("{} {} {}\n", self.kind, self.dim, self.size());
        for f in &self.forms {
            let row: Vec<String> = f.coeffs.iter().map(format_rational).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Send hyperplane `h` to infinity: an exact projective change of
    /// coordinates maps the remaining `m-1` hyperplanes to an affine
    /// arrangement whose complement is homeomorphic to the projective
    /// complement. Labels carry the original hyperplane names.
    pub fn decone(&self, h: usize) -> Result<Arrangement> {
        if self.kind != Kind::Projective {
            return Err(Error::validation("decone expects a projective arrangement"));
        }
        if h < 1 || h > self.size() {
            return Err(Error::validation(format!(
                "decone index {h} out of range 1..={}",
                self.size()
            )));
        }
        if self.size() < 2 {
            return Err(Error::validation(
                "cannot decone an arrangement with a single hyperplane",
            ));
        }
        let n = self.dim;
        let width = n + 1;
        let target = &self.forms[h - 1].coeffs;

        // complete the chosen form to a basis with standard vectors
        let mut rows: Vec<Vec<Rat>> = vec![target.clone()];
        for i in 0..width {
            if rows.len() == width {
                break;
            }
            let mut e = vec![Rat::zero(); width];
            e[i] = Rat::one();
            let mut candidate = rows.clone();
            candidate.push(e);
            if QMatrix::from_rows(candidate.clone())?.rank() == candidate.len() {
                rows = candidate;
            }
        }
        debug_assert_eq!(rows.len(), width);
        // new coordinates y = T x with y_n = f_h(x)
        let mut t_rows = rows[1..].to_vec();
        t_rows.push(rows[0].clone());
        let t = QMatrix::from_rows(t_rows)?;
        let s = t
            .inverse()?
            .expect("basis completion produced an invertible matrix");

        let mut forms = Vec::with_capacity(self.size() - 1);
        let mut labels = Vec::with_capacity(self.size() - 1);
        for j in 1..=self.size() {
            if j == h {
                continue;
            }
            // f_j(x) = f_j(S y); on the chart y_n = 1 this is an affine form
            let row = QMatrix::new(1, width, self.forms[j - 1].coeffs.clone())?;
            let d = row.mul(&s)?;
            forms.push(LinearForm::new(d.row(0).to_vec()));
            labels.push(self.labels[j - 1].clone());
        }
        Arrangement::with_labels(Kind::Affine, n, forms, labels)
    }

    /// Projective closure of an affine arrangement, with the hyperplane at
    /// infinity appended as the last form.
    pub fn rehomogenize(&self) -> Result<Arrangement> {
        if self.kind != Kind::Affine {
            return Err(Error::validation("rehomogenize expects an affine arrangement"));
        }
        let n = self.dim;
        let mut forms: Vec<LinearForm> = self.forms.clone();
        let mut infinity = vec![Rat::zero(); n + 1];
        infinity[n] = Rat::one();
        forms.push(LinearForm::new(infinity));
        let mut labels = self.labels.clone();
        labels.push("H_inf".into());
        Arrangement::with_labels(Kind::Projective, n, forms, labels)
    }

    /// View a central arrangement as an affine one (zero constant terms) in
    /// its vector space of `n+1` coordinates.
    pub fn central_as_affine(&self) -> Result<Arrangement> {
        if self.kind != Kind::Central {
            return Err(Error::validation("central_as_affine expects a central arrangement"));
        }
        let forms = self
            .forms
            .iter()
            .map(|f| {
                let mut coeffs = f.coeffs.clone();
                coeffs.push(Rat::zero());
                LinearForm::new(coeffs)
            })
            .collect();
        Arrangement::with_labels(Kind::Affine, self.dim + 1, forms, self.labels.clone())
    }

    /// Restrict to a pseudo-random rational subspace of dimension `c`.
    ///
    /// Coefficients are drawn from a seeded generator with bounded height.
    /// Genericity is verified a posteriori: the intersection poset of the
    /// slice must agree with the codimension-at-most-`c` truncation of the
    /// original poset, otherwise the plane is redrawn (bounded retries).
    pub fn generic_slice(&self, c: usize, seed: u64) -> Result<Arrangement> {
        if c < 1 || c > self.dim {
            return Err(Error::validation(format!(
                "slice dimension {c} out of range 1..={}",
                self.dim
            )));
        }
        let original = crate::lattice::IntersectionLattice::build(self)?;
        let truncated = original.truncate(c);

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        const ATTEMPTS: usize = 64;
        for _ in 0..ATTEMPTS {
            if let Some(slice) = self.try_slice(c, &mut rng)? {
                let lat = crate::lattice::IntersectionLattice::build(&slice)?;
                if lat.truncate(c) == truncated {
                    return Ok(slice);
                }
            }
        }
        Err(Error::Genericity {
            seed,
            attempts: ATTEMPTS,
        })
    }

    fn try_slice(&self, c: usize, rng: &mut ChaCha8Rng) -> Result<Option<Arrangement>> {
        let mut draw = || Rat::from_integer(rng.gen_range(-20i64..=20).into());
        let forms: Vec<LinearForm> = match self.kind {
            Kind::Projective | Kind::Central => {
                // columns of P span a linear subspace of dimension c+1
                let width = self.dim + 1;
                let p: Vec<Vec<Rat>> = (0..width)
                    .map(|_| (0..c + 1).map(|_| draw()).collect())
                    .collect();
                self.forms
                    .iter()
                    .map(|f| {
                        LinearForm::new(
                            (0..c + 1)
                                .map(|j| {
                                    f.coeffs
                                        .iter()
                                        .zip(&p)
                                        .map(|(a, row)| a * &row[j])
                                        .sum()
                                })
                                .collect(),
                        )
                    })
                    .collect()
            }
            Kind::Affine => {
                // x = p0 + B y, with B of shape n x c
                let n = self.dim;
                let b: Vec<Vec<Rat>> = (0..n).map(|_| (0..c).map(|_| draw()).collect()).collect();
                let p0: Vec<Rat> = (0..n).map(|_| draw()).collect();
                self.forms
                    .iter()
                    .map(|f| {
                        let hom = &f.coeffs[..n];
                        let cst = &f.coeffs[n];
                        let mut coeffs: Vec<Rat> = (0..c)
                            .map(|j| hom.iter().zip(&b).map(|(a, row)| a * &row[j]).sum())
                            .collect();
                        let shift: Rat = hom.iter().zip(&p0).map(|(a, p)| a * p).sum();
                        coeffs.push(shift + cst);
                        LinearForm::new(coeffs)
                    })
                    .collect()
            }
        };
        match Arrangement::with_labels(self.kind, c, forms, self.labels.clone()) {
            Ok(a) => Ok(Some(a)),
            Err(Error::Validation(_)) => Ok(None), // degenerate draw, retry
            Err(e) => Err(e),
        }
    }
}

/// Builtin example corpus.
///
/// * `cdo-ex1`: five lines `x, x-z, y, y-z, z` in `P^2`;
/// * `cdo-ex2`: six lines `x, x-z, y, y-2z, x-y, z` in `P^2`;
/// * `braid-a3`: six lines `x, y, z, x-y, x-z, y-z` in `P^2`;
/// * `generic(m)`: `m` lines in general position in `P^2`;
/// * `boolean(n)`: the `n` coordinate hyperplanes of `C^n` (central).
pub fn builtin_arrangement(name: &str) -> Result<Arrangement> {
    let lines = |rows: &[&[i64]]| -> Vec<LinearForm> {
        rows.iter().map(|r| LinearForm::from_ints(r)).collect()
    };
    match name {
        "cdo-ex1" => Arrangement::new(
            Kind::Projective,
            2,
            lines(&[
                &[1, 0, 0],
                &[1, 0, -1],
                &[0, 1, 0],
                &[0, 1, -1],
                &[0, 0, 1],
            ]),
        ),
        "cdo-ex2" => Arrangement::new(
            Kind::Projective,
            2,
            lines(&[
                &[1, 0, 0],
                &[1, 0, -1],
                &[0, 1, 0],
                &[0, 1, -2],
                &[1, -1, 0],
                &[0, 0, 1],
            ]),
        ),
        "braid-a3" => Arrangement::new(
            Kind::Projective,
            2,
            lines(&[
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, -1, 0],
                &[1, 0, -1],
                &[0, 1, -1],
            ]),
        ),
        _ => {
            if let Some(m) = parse_parameter(name, "generic") {
                if m < 1 {
                    return Err(Error::validation("generic(m) needs m >= 1"));
                }
                // lines tangent to the dual moment curve: no three concurrent
                let forms = (0..m)
                    .map(|j| {
                        let j = j as i64;
                        LinearForm::from_ints(&[1, j, j * j])
                    })
                    .collect();
                Arrangement::new(Kind::Projective, 2, forms)
            } else if let Some(n) = parse_parameter(name, "boolean") {
                if n < 1 {
                    return Err(Error::validation("boolean(n) needs n >= 1"));
                }
                let forms = (0..n)
                    .map(|i| {
                        let mut coeffs = vec![Rat::zero(); n];
                        coeffs[i] = Rat::one();
                        LinearForm::new(coeffs)
                    })
                    .collect();
                Arrangement::new(Kind::Central, n - 1, forms)
            } else {
                Err(Error::validation(format!("unknown builtin arrangement '{name}'")))
            }
        }
    }
}

/// Names of the builtin arrangements, for listings.
pub fn builtin_names() -> Vec<&'static str> {
    vec!["cdo-ex1", "cdo-ex2", "braid-a3", "generic(m)", "boolean(n)"]
}

fn parse_parameter(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .parse()
        .ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact::rat;

    #[test]
    fn parse_cdo_ex1() {
        let text = "projective 2 5\n1 0 0\n1 0 -1\n0 1 0\n0 1 -1\n0 0 1\n";
        let a = Arrangement::parse(text).unwrap();
        assert_eq!(a.kind(), Kind::Projective);
        assert_eq!(a.size(), 5);
        assert_eq!(a, builtin_arrangement("cdo-ex1").unwrap());
    }

    #[test]
    fn parse_rejects_zero_form() {
        let text = "projective 2 2\n1 0 0\n0 0 0\n";
        let err = Arrangement::parse(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("zero form"), "{msg}");
        assert!(msg.contains("line 3"), "{msg}");
    }

    #[test]
    fn parse_rejects_proportional_forms() {
        let text = "projective 2 2\n1 0 0\n2 0 0\n";
        let err = Arrangement::parse(text).unwrap_err();
        assert!(err.to_string().contains("proportional forms 1,2"), "{err}");
    }

    #[test]
    fn parse_rejects_ragged_row() {
        let text = "projective 2 2\n1 0 0\n1 0\n";
        let err = Arrangement::parse(text).unwrap_err();
        assert!(err.to_string().contains("expected 3 coefficients"), "{err}");
    }

    #[test]
    fn parse_rejects_malformed_rational() {
        let text = "projective 2 1\n1 0 x\n";
        let err = Arrangement::parse(text).unwrap_err();
        assert!(err.to_string().contains("malformed rational"), "{err}");
    }

    #[test]
    fn parse_skips_comments_and_roundtrips() {
        let text = "# grid\naffine 2 2\n1 0 0\n# middle comment\n0 1 -1\n";
        let a = Arrangement::parse(text).unwrap();
        assert_eq!(a.size(), 2);
        let again = Arrangement::parse(&a.to_arr()).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn decone_cdo_ex1_at_z_gives_the_grid() {
        let a = builtin_arrangement("cdo-ex1").unwrap();
        let d = a.decone(5).unwrap();
        assert_eq!(d.kind(), Kind::Affine);
        assert_eq!(d.size(), 4);
        let expected = [
            vec![rat(1, 1), rat(0, 1), rat(0, 1)],  // x
            vec![rat(1, 1), rat(0, 1), rat(-1, 1)], // x - 1
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],  // y
            vec![rat(0, 1), rat(1, 1), rat(-1, 1)], // y - 1
        ];
        for (f, e) in d.forms().iter().zip(&expected) {
            assert_eq!(&f.coeffs, e);
        }
        assert_eq!(d.labels(), &["H1", "H2", "H3", "H4"]);
    }

    #[test]
    fn decone_two_lines_gives_single_affine_line() {
        let a = Arrangement::new(
            Kind::Projective,
            1,
            vec![LinearForm::from_ints(&[1, 0]), LinearForm::from_ints(&[0, 1])],
        )
        .unwrap();
        let d = a.decone(2).unwrap();
        assert_eq!(d.size(), 1);
    }

    #[test]
    fn decone_braid_at_first_coordinate() {
        let a = builtin_arrangement("braid-a3").unwrap();
        let d = a.decone(1).unwrap();
        assert_eq!(d.size(), 5);
        assert_eq!(d.kind(), Kind::Affine);
    }

    #[test]
    fn decone_index_out_of_range() {
        let a = builtin_arrangement("cdo-ex1").unwrap();
        assert!(a.decone(0).is_err());
        assert!(a.decone(6).is_err());
    }

    #[test]
    fn builtins() {
        assert_eq!(builtin_arrangement("cdo-ex1").unwrap().size(), 5);
        assert_eq!(builtin_arrangement("cdo-ex2").unwrap().size(), 6);
        assert_eq!(builtin_arrangement("braid-a3").unwrap().size(), 6);
        let b = builtin_arrangement("boolean(2)").unwrap();
        assert_eq!(b.kind(), Kind::Central);
        assert_eq!(b.size(), 2);
        assert_eq!(b.form(1).coeffs, vec![rat(1, 1), rat(0, 1)]);
        assert_eq!(b.form(2).coeffs, vec![rat(0, 1), rat(1, 1)]);
        assert_eq!(builtin_arrangement("generic(7)").unwrap().size(), 7);
        assert!(builtin_arrangement("nope").is_err());
    }
}
