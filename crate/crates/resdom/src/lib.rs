//! Edge-list IO, the verification harness and the command-line front end
//! for [`resdom_core`].

pub mod cli;
pub mod edge_list;
pub mod verify;
