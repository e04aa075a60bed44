pub mod catalan;
pub mod cli;
pub mod domain;
pub mod ideal;
pub mod linalg;
pub mod link;
pub mod poly;
pub mod verify;
