use super::{InverseSemigroup, IsgError};
use crate::action::checks::Bounds;
use crate::action::Group;
use crate::graph::Path;

/// An element `(α, g)` of the Zappa–Szép product `E* ⋈ G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZsPair<E> {
    pub alpha: Path,
    pub g: E,
}

impl<G: Group> InverseSemigroup<'_, G> {
    fn require_single_vertex(&self) -> Result<(), IsgError> {
        if self.action().graph().is_single_vertex() {
            Ok(())
        } else {
            Err(IsgError::MultiVertex)
        }
    }

    /// `(α, g)(β, h) = (α·gβ, φ(g, β)h)`.
    pub fn zs_multiply(
        &self,
        p: &ZsPair<G::Elem>,
        q: &ZsPair<G::Elem>,
    ) -> Result<ZsPair<G::Elem>, IsgError> {
        self.require_single_vertex()?;
        let (moved, restriction) = self.action().act_restrict(&p.g, &q.alpha);
        Ok(ZsPair {
            alpha: p.alpha.concat(&moved).expect("single vertex"),
            g: self.action().group().multiply(&restriction, &q.g),
        })
    }

    pub fn zs_identity(&self) -> Result<ZsPair<G::Elem>, IsgError> {
        self.require_single_vertex()?;
        Ok(ZsPair {
            alpha: self.action().graph().paths_of_length(0).remove(0),
            g: self.action().group().identity(),
        })
    }

    /// Pairs with `|α| ≤ path_len` and `g` in the ball.
    pub fn zs_enumerate(&self, bounds: Bounds) -> Result<Vec<ZsPair<G::Elem>>, IsgError> {
        self.require_single_vertex()?;
        let ball = self.action().group().ball(bounds.radius);
        Ok(self
            .action()
            .graph()
            .paths_up_to(bounds.path_len)
            .into_iter()
            .flat_map(|alpha| {
                ball.iter().map(move |g| ZsPair {
                    alpha: alpha.clone(),
                    g: g.clone(),
                })
            })
            .collect())
    }

    pub fn render_zs(&self, p: &ZsPair<G::Elem>) -> String {
        format!(
            "({}, {})",
            self.action().render_path(&p.alpha),
            self.action().render_elem(&p.g)
        )
    }
}
