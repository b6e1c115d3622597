pub mod cat_o;
pub mod chains;
pub mod charlib;
pub mod error;
pub mod exec;
pub mod homology;
pub mod liealg;
pub mod linalg;
pub mod oracles;
pub mod rootsys;
pub mod verify;
pub mod verma;
pub mod weyl;
