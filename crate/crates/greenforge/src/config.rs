use greenforge_core::{Error, Indecomposable, QSpec, QuiverContext, QuiverKind, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

/// Everything a subcommand needs before it touches the library.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub ctx: QuiverContext,
    pub max_len: usize,
    pub window: i64,
    pub format: OutputFormat,
}

impl JobConfig {
    /// `cyclic = Some(n)` selects `Cyclic(n)`, `None` the infinite quiver.
    pub fn new(cyclic: Option<u32>, q: &str) -> Result<Self> {
        let q = parse_q(q)?;
        let kind = match cyclic {
            Some(n) => QuiverKind::Cyclic(n),
            None => QuiverKind::InfiniteLinear,
        };
        Ok(JobConfig {
            ctx: QuiverContext::new(kind, q)?,
            max_len: 6,
            window: 2,
            format: OutputFormat::Json,
        })
    }

    /// Vertices visited by sweeps: `0..n` on a cycle, `[-window, window]` on the line.
    pub fn vertices(&self) -> Vec<i64> {
        match self.ctx.vertex_count() {
            Some(n) => (0..i64::from(n)).collect(),
            None => (-self.window..=self.window).collect(),
        }
    }
}

/// `"1"`, `"-1"`, `"3/5"` or `"zeta:N:k"`.
pub fn parse_q(text: &str) -> Result<QSpec> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("zeta:") {
        let (n, k) = rest
            .split_once(':')
            .ok_or_else(|| Error::InvalidQ(format!("expected zeta:N:k, got {text:?}")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidQ(format!("bad integer {s:?} in {text:?}")))
        };
        let (n, k) = (parse(n)?, parse(k)?);
        if n == 0 {
            return Err(Error::InvalidQ("zeta:0 is not a root of unity".into()));
        }
        if k % n == 0 {
            return Ok(QSpec::One);
        }
        return QSpec::root_of_unity(n, k % n);
    }
    let r: Rational = text
        .parse()
        .map_err(|_| Error::InvalidQ(format!("cannot read {text:?} as a rational")))?;
    QSpec::from_rational(r)
}

/// `"i,l"`, optionally wrapped as `"(i,l)"` or `"V(i,l)"`.
pub fn parse_operand(text: &str) -> Result<Indecomposable> {
    let t = text.trim();
    let t = t.strip_prefix('V').unwrap_or(t);
    let t = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t);
    let bad = || Error::Parse(format!("expected an operand i,l but got {text:?}"));
    let (i, l) = t.split_once(',').ok_or_else(bad)?;
    let i = i.trim().parse::<i64>().map_err(|_| bad())?;
    let l = l.trim().parse::<usize>().map_err(|_| bad())?;
    Ok(Indecomposable::new(i, l))
}
