use num_bigint::BigInt;

use super::{
    Affine, BS12Engine, ExtElem, ExtensionEngine, FiniteGroupTable, GroupEngine, GroupError, NormalForm,
    ProductEngine, ZmElem, ZmSemidirectEngine, ZnC2Elem, ZnC2Engine,
};
use crate::words::{Alphabet, Letter, Word};

/// Runtime choice of engine, as loaded from a group file. Infinite families
/// use arbitrary-precision coordinates.
#[derive(Debug, Clone)]
pub enum AnyEngine {
    Table(FiniteGroupTable),
    ZnC2(ZnC2Engine<BigInt>),
    Bs12(BS12Engine<BigInt>),
    Zm(ZmSemidirectEngine<BigInt>),
    Extension(ExtensionEngine<BigInt>),
    Product(Box<ProductEngine<AnyEngine, AnyEngine>>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnyElem {
    Table(usize),
    ZnC2(ZnC2Elem<BigInt>),
    Bs12(Affine<BigInt>),
    Zm(ZmElem<BigInt>),
    Extension(ExtElem<BigInt>),
    Product(Box<(AnyElem, AnyElem)>),
}

macro_rules! dispatch {
    ($self:expr, $e:ident => $body:expr) => {
        match $self {
            AnyEngine::Table($e) => $body,
            AnyEngine::ZnC2($e) => $body,
            AnyEngine::Bs12($e) => $body,
            AnyEngine::Zm($e) => $body,
            AnyEngine::Extension($e) => $body,
            AnyEngine::Product($e) => $body,
        }
    };
}

/// Binary/unary lifts of the concrete element operations.
macro_rules! lift {
    ($self:expr, ($($arg:expr),*), |$e:ident, $($x:ident),*| $body:expr) => {
        match ($self, $($arg),*) {
            (AnyEngine::Table($e), $(AnyElem::Table($x)),*) => AnyElem::Table($body),
            (AnyEngine::ZnC2($e), $(AnyElem::ZnC2($x)),*) => AnyElem::ZnC2($body),
            (AnyEngine::Bs12($e), $(AnyElem::Bs12($x)),*) => AnyElem::Bs12($body),
            (AnyEngine::Zm($e), $(AnyElem::Zm($x)),*) => AnyElem::Zm($body),
            (AnyEngine::Extension($e), $(AnyElem::Extension($x)),*) => AnyElem::Extension($body),
            (AnyEngine::Product($e), $(AnyElem::Product($x)),*) => AnyElem::Product(Box::new($body)),
            _ => panic!("element does not belong to this engine"),
        }
    };
}

impl AnyEngine {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyEngine::Table(_) => "table",
            AnyEngine::ZnC2(_) => "zn_c2",
            AnyEngine::Bs12(_) => "bs12",
            AnyEngine::Zm(_) => "zm_semidirect",
            AnyEngine::Extension(_) => "extension",
            AnyEngine::Product(_) => "product",
        }
    }

    pub fn as_table(&self) -> Option<&FiniteGroupTable> {
        match self {
            AnyEngine::Table(t) => Some(t),
            _ => None,
        }
    }
}

impl GroupEngine for AnyEngine {
    type Elem = AnyElem;

    fn identity(&self) -> AnyElem {
        match self {
            AnyEngine::Table(e) => AnyElem::Table(e.identity()),
            AnyEngine::ZnC2(e) => AnyElem::ZnC2(e.identity()),
            AnyEngine::Bs12(e) => AnyElem::Bs12(e.identity()),
            AnyEngine::Zm(e) => AnyElem::Zm(e.identity()),
            AnyEngine::Extension(e) => AnyElem::Extension(e.identity()),
            AnyEngine::Product(e) => AnyElem::Product(Box::new(e.identity())),
        }
    }

    fn multiply(&self, lhs: &AnyElem, rhs: &AnyElem) -> AnyElem {
        lift!(self, (lhs, rhs), |e, x, y| e.multiply(x, y))
    }

    fn inverse(&self, g: &AnyElem) -> AnyElem {
        lift!(self, (g), |e, x| e.inverse(x))
    }

    fn builtin(&self) -> &Alphabet {
        dispatch!(self, e => e.builtin())
    }

    fn builtin_element(&self, letter: Letter) -> AnyElem {
        match self {
            AnyEngine::Table(e) => AnyElem::Table(e.builtin_element(letter)),
            AnyEngine::ZnC2(e) => AnyElem::ZnC2(e.builtin_element(letter)),
            AnyEngine::Bs12(e) => AnyElem::Bs12(e.builtin_element(letter)),
            AnyEngine::Zm(e) => AnyElem::Zm(e.builtin_element(letter)),
            AnyEngine::Extension(e) => AnyElem::Extension(e.builtin_element(letter)),
            AnyEngine::Product(e) => AnyElem::Product(Box::new(e.builtin_element(letter))),
        }
    }

    fn key(&self, g: &AnyElem) -> String {
        match (self, g) {
            (AnyEngine::Table(e), AnyElem::Table(x)) => e.key(x),
            (AnyEngine::ZnC2(e), AnyElem::ZnC2(x)) => e.key(x),
            (AnyEngine::Bs12(e), AnyElem::Bs12(x)) => e.key(x),
            (AnyEngine::Zm(e), AnyElem::Zm(x)) => e.key(x),
            (AnyEngine::Extension(e), AnyElem::Extension(x)) => e.key(x),
            (AnyEngine::Product(e), AnyElem::Product(x)) => e.key(x),
            _ => panic!("element does not belong to this engine"),
        }
    }

    fn order(&self) -> Option<usize> {
        match self {
            AnyEngine::Table(e) => GroupEngine::order(e),
            AnyEngine::ZnC2(e) => e.order(),
            AnyEngine::Bs12(e) => e.order(),
            AnyEngine::Zm(e) => e.order(),
            AnyEngine::Extension(e) => e.order(),
            AnyEngine::Product(e) => e.order(),
        }
    }
}

/// The normal-form word of an element, for the engines that have one.
pub fn rho_normal_form(engine: &AnyEngine, g: &AnyElem) -> Result<Word, GroupError> {
    match (engine, g) {
        (AnyEngine::ZnC2(e), AnyElem::ZnC2(x)) => Ok(e.normal_form(x)),
        (AnyEngine::Bs12(e), AnyElem::Bs12(x)) => Ok(e.normal_form(x)),
        (AnyEngine::Zm(e), AnyElem::Zm(x)) => Ok(e.normal_form(x)),
        _ => Err(GroupError::Unsupported(engine.kind())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{evaluate_text, TOrder};

    #[test]
    fn dispatch_matches_concrete() {
        let z = AnyEngine::Zm(ZmSemidirectEngine::with_names(5, 3, TOrder::Infinite, "a", "x").unwrap());
        let g = evaluate_text(&z, "x a").unwrap();
        assert_eq!(z.key(&g), "(3,1)");
        assert_eq!(rho_normal_form(&z, &g).unwrap(), z.builtin().word("a a a x").unwrap());
        let t = AnyEngine::Table(FiniteGroupTable::quaternion());
        let k = evaluate_text(&t, "i j").unwrap();
        assert_eq!(t.key(&k), "k");
        assert_eq!(rho_normal_form(&t, &k), Err(GroupError::Unsupported("table")));
    }

    #[test]
    fn nested_product() {
        let p = ProductEngine::new(AnyEngine::Bs12(BS12Engine::new()), AnyEngine::Table(FiniteGroupTable::cyclic(2)))
            .unwrap();
        let p = AnyEngine::Product(Box::new(p));
        let g = evaluate_text(&p, "t_1 a_1 g_2 t^-1_1 g_2").unwrap();
        assert_eq!(g, evaluate_text(&p, "a_1 a_1").unwrap());
        assert_eq!(p.key(&g), "((0,2),1)");
    }
}
