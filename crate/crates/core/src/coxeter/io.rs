use serde::{Deserialize, Serialize};

use crate::coxeter::AffinePermutation;
use crate::error::{Error, Result};

/// `{"n": 4, "window": [2,5,0,3]}` or `{"n": 4, "word": [0,3,2]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementJson {
    Window { n: usize, window: Vec<i64> },
    Word { n: usize, word: Vec<usize> },
}

impl ElementJson {
    pub fn to_element(&self) -> Result<AffinePermutation> {
        match self {
            ElementJson::Window { n, window } => AffinePermutation::from_window(*n, window.clone()),
            ElementJson::Word { n, word } => AffinePermutation::from_word(*n, word),
        }
    }

    /// Window form of `w`.
    pub fn window_of(w: &AffinePermutation) -> Self {
        ElementJson::Window { n: w.period(), window: w.window().to_vec() }
    }

    pub fn parse(text: &str) -> Result<AffinePermutation> {
        let json: ElementJson = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        json.to_element()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_and_word_forms() {
        let a = ElementJson::parse(r#"{"n": 4, "window": [2,5,0,3]}"#).unwrap();
        assert_eq!(a.window(), &[2, 5, 0, 3]);
        let b = ElementJson::parse(r#"{"n": 4, "word": [0,3,2]}"#).unwrap();
        assert_eq!(b, AffinePermutation::from_word(4, &[0, 3, 2]).unwrap());
        let echoed = serde_json::to_string(&ElementJson::window_of(&b)).unwrap();
        assert_eq!(ElementJson::parse(&echoed).unwrap(), b);
    }

    #[test]
    fn rejects_bad_windows() {
        assert!(ElementJson::parse(r#"{"n": 3, "window": [1,1,4]}"#).is_err());
        assert!(ElementJson::parse(r#"{"n": 3}"#).is_err());
    }
}
