use crate::piecewise::{Domain, StepFunction};
use crate::rational::Rational;
use crate::{Error, Result};

/// A nonempty finite family of step functions on a common domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionFamily {
    domain: Domain,
    members: Vec<StepFunction>,
    generator: Option<String>,
}

impl FunctionFamily {
    pub fn new(members: Vec<StepFunction>) -> Result<Self> {
        let domain = members
            .first()
            .ok_or_else(|| Error::Precondition("empty family".into()))?
            .domain();
        if members.iter().any(|f| f.domain() != domain) {
            return Err(Error::InvalidFunction("family members live on different domains".into()));
        }
        Ok(FunctionFamily {
            domain,
            members,
            generator: None,
        })
    }

    /// Attaches a description of the rule that produced the members.
    pub fn with_generator(mut self, generator: impl Into<String>) -> Self {
        self.generator = Some(generator.into());
        self
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn members(&self) -> &[StepFunction] {
        &self.members
    }

    pub fn generator(&self) -> Option<&str> {
        self.generator.as_deref()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `max_f ∫|f|`.
    pub fn l1_bound(&self) -> Rational {
        self.members.iter().map(StepFunction::total_integral).max().expect("nonempty")
    }
}
