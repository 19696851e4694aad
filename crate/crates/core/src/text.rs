//! Text notation for orders: classes separated by `>`, ties separated by
//! `,`. So `x,y > z` ranks x and y together above z, and `x > y > z` is a
//! strict chain.

use thiserror::Error;

use crate::model::{LinearOrder, Menu, Universe, WeakOrder};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OrderParseError {
    #[error("empty order expression")]
    Empty,
    #[error("empty class in order expression")]
    EmptyClass,
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("label {0:?} appears twice")]
    DuplicateLabel(String),
    #[error("label {0:?} is missing from the order")]
    MissingLabel(String),
    #[error("a linear order cannot tie {0:?} with {1:?}")]
    Tie(String, String),
}

pub fn parse_weak_order(text: &str, u: &Universe) -> Result<WeakOrder, OrderParseError> {
    if text.trim().is_empty() {
        return Err(OrderParseError::Empty);
    }
    let mut seen = 0u16;
    let mut classes = Vec::new();
    for class_text in text.split('>') {
        let mut bits = 0u16;
        for raw in class_text.split(',') {
            let label = raw.trim();
            if label.is_empty() {
                return Err(OrderParseError::EmptyClass);
            }
            let a = u
                .index_of(label)
                .ok_or_else(|| OrderParseError::UnknownLabel(label.to_owned()))?;
            if seen & (1 << a) != 0 {
                return Err(OrderParseError::DuplicateLabel(label.to_owned()));
            }
            seen |= 1 << a;
            bits |= 1 << a;
        }
        classes.push(Menu::new(bits));
    }
    if seen != u.full_menu().bits() {
        let missing = u
            .full_menu()
            .alts()
            .find(|&a| seen & (1 << a) == 0)
            .expect("some alternative is missing");
        return Err(OrderParseError::MissingLabel(u.label(missing).to_owned()));
    }
    Ok(WeakOrder::new(u.n(), classes).expect("validated classes partition the universe"))
}

pub fn parse_linear_order(text: &str, u: &Universe) -> Result<LinearOrder, OrderParseError> {
    let weak = parse_weak_order(text, u)?;
    let mut ranking = Vec::with_capacity(u.n() as usize);
    for class in weak.classes() {
        if !class.is_singleton() {
            let mut members = class.alts();
            let a = members.next().expect("class nonempty");
            let b = members.next().expect("class not a singleton");
            return Err(OrderParseError::Tie(
                u.label(a).to_owned(),
                u.label(b).to_owned(),
            ));
        }
        ranking.extend(class.alts());
    }
    Ok(LinearOrder::new(ranking).expect("singleton classes form a permutation"))
}

pub fn format_weak_order(w: &WeakOrder, u: &Universe) -> String {
    w.classes()
        .iter()
        .map(|class| {
            class
                .alts()
                .map(|a| u.label(a))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(" > ")
}

pub fn format_linear_order(l: &LinearOrder, u: &Universe) -> String {
    l.ranking()
        .iter()
        .map(|&a| u.label(a))
        .collect::<Vec<_>>()
        .join(" > ")
}
