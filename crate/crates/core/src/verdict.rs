use std::fmt;

/// Three-valued outcome of a (semi-)decision procedure.
///
/// `Holds` and `Fails` carry data that can be re-checked by direct
/// computation; `Unknown` records the bound at which the search stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<H, F> {
    Holds(H),
    Fails(F),
    Unknown(SearchBound),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBound {
    pub bound: u64,
    pub note: String,
}

impl SearchBound {
    pub fn new(bound: u64, note: impl Into<String>) -> Self {
        SearchBound { bound, note: note.into() }
    }
}

impl fmt::Display for SearchBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (bound {})", self.note, self.bound)
    }
}

impl<H, F> Verdict<H, F> {
    pub fn unknown(bound: u64, note: impl Into<String>) -> Self {
        Verdict::Unknown(SearchBound::new(bound, note))
    }

    pub fn is_holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn is_fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    pub fn holds(&self) -> Option<&H> {
        match self {
            Verdict::Holds(h) => Some(h),
            _ => None,
        }
    }

    pub fn fails(&self) -> Option<&F> {
        match self {
            Verdict::Fails(f) => Some(f),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds(_) => "Holds",
            Verdict::Fails(_) => "Fails",
            Verdict::Unknown(_) => "Unknown",
        }
    }

    pub fn map_holds<H2>(self, f: impl FnOnce(H) -> H2) -> Verdict<H2, F> {
        match self {
            Verdict::Holds(h) => Verdict::Holds(f(h)),
            Verdict::Fails(x) => Verdict::Fails(x),
            Verdict::Unknown(b) => Verdict::Unknown(b),
        }
    }

    pub fn map_fails<F2>(self, f: impl FnOnce(F) -> F2) -> Verdict<H, F2> {
        match self {
            Verdict::Holds(h) => Verdict::Holds(h),
            Verdict::Fails(x) => Verdict::Fails(f(x)),
            Verdict::Unknown(b) => Verdict::Unknown(b),
        }
    }
}
