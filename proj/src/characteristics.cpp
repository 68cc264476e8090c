#include "agility/framework.hpp"

namespace agility {

const std::vector<Characteristic>& default_characteristics() {
    static const std::vector<Characteristic> list = {
        {1, "Whether or not a collaborative or a command-control relation exists between managers and "
            "subordinates. The management style is an indication of whether or not management trusts the "
            "developers and vice versa."},
        {2, "Whether or not management is supportive of or resistive to having a collaborative environment."},
        {3, "Whether or not management can be open with customers and developers, i.e., no politics and secrets."},
        {4, "Whether or not people are intimidated/afraid to give honest feedback and participation in the "
            "presence of their managers."},
        {5, "Whether or not the developers are willing to plan in a collaborative environment."},
        {6, "Whether or not the organization does basic planning for its projects."},
        {7, "Whether or not any levels of interaction exist between people thus laying a foundation for more "
            "team work."},
        {8, "Whether or not people believe in group work and helping others or are just concerned about "
            "themselves."},
        {9, "Whether or not people are willing to work in teams."},
        {10, "Whether or not people recognize that their input is valuable in group work."},
        {11, "Whether or not the developers see the benefit and are willing to apply coding standards."},
        {12, "Whether or not developers believe in and can see the benefits of having project information "
             "communicated to the whole team."},
        {13, "Whether or not managers believe in and can see the benefits of having project information "
             "communicated to the whole team."},
        {14, "Whether or not management will be willing to buy into and can see benefits from employees "
             "volunteering for tasks instead of being assigned."},
        {15, "Whether or not developers are willing to see the benefits from volunteering for tasks."},
        {16, "Whether or not management empowers teams with decision making authority."},
        {17, "Whether or not people are treated in a way that motivates them."},
        {18, "Whether or not managers trust and believe in the technical team in order to truly empower them."},
        {19, "Whether or not developers are willing to commit to reflecting about and tuning the process after "
             "each iteration or release."},
        {20, "Whether or not management is willing to commit to reflecting about and tuning the process after "
             "each iteration or release."},
        {21, "Whether or not the organization can handle process change in the middle of the project."},
    };
    return list;
}

}  // namespace agility
